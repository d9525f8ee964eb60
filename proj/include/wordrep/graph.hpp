#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wordrep {

/// Finite simple undirected graph over string vertex labels.
///
/// Vertices keep construction order. Edges are stored as (lo, hi) index
/// pairs sorted lexicographically, so two equal graphs compare equal and
/// serialize identically. Values are immutable after construction; every
/// "modifying" operation returns a new graph.
class Graph {
 public:
  Graph() = default;

  static Graph build(std::vector<std::string> labels,
                     const std::vector<std::pair<std::string, std::string>>& edges) {
    Graph g;
    g.labels_ = std::move(labels);
    g.index_.reserve(g.labels_.size());
    for (int i = 0; i < static_cast<int>(g.labels_.size()); ++i) {
      const std::string& s = g.labels_[i];
      if (s.empty()) throw std::invalid_argument("empty vertex label");
      for (char c : s)
        if (std::isspace(static_cast<unsigned char>(c)))
          throw std::invalid_argument("vertex label contains whitespace: \"" + s + "\"");
      if (!g.index_.emplace(s, i).second)
        throw std::invalid_argument("duplicate vertex label: " + s);
    }
    std::vector<std::pair<int, int>> es;
    es.reserve(edges.size());
    for (const auto& [a, b] : edges) {
      int u = g.index(a);
      int v = g.index(b);
      if (u == v) throw std::invalid_argument("loop at vertex " + a);
      es.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end())
      throw std::invalid_argument("duplicate edge");
    g.edges_ = std::move(es);
    g.adj_.assign(g.labels_.size(), {});
    for (auto [u, v] : g.edges_) {
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    for (auto& row : g.adj_) std::sort(row.begin(), row.end());
    return g;
  }

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_.at(v); }

  /// Edges as canonical (lo, hi) vertex-index pairs, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  std::vector<std::pair<std::string, std::string>> edge_labels() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(edges_.size());
    for (auto [u, v] : edges_) out.emplace_back(labels_[u], labels_[v]);
    return out;
  }

  std::optional<int> try_index(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  int index(std::string_view label) const {
    auto i = try_index(label);
    if (!i) throw std::invalid_argument("unknown vertex: " + std::string(label));
    return *i;
  }

  bool has_vertex(std::string_view label) const { return try_index(label).has_value(); }

  bool has_edge(int u, int v) const {
    if (u == v) return false;
    auto e = std::make_pair(std::min(u, v), std::max(u, v));
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  bool has_edge(std::string_view a, std::string_view b) const {
    auto u = try_index(a);
    auto v = try_index(b);
    return u && v && has_edge(*u, *v);
  }

  /// Position of edge {u,v} in the canonical edge list, if present.
  std::optional<int> edge_id(int u, int v) const {
    auto e = std::make_pair(std::min(u, v), std::max(u, v));
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
  }

  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

  /// Degrees sorted descending.
  std::vector<int> degree_sequence() const {
    std::vector<int> d(labels_.size());
    for (int v = 0; v < vertex_count(); ++v) d[v] = degree(v);
    std::sort(d.rbegin(), d.rend());
    return d;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

inline Graph build_graph(std::vector<std::string> vertices,
                         const std::vector<std::pair<std::string, std::string>>& edges) {
  return Graph::build(std::move(vertices), edges);
}

namespace detail {
inline std::vector<std::string> numeric_labels(int n, int start = 1) {
  std::vector<std::string> v;
  v.reserve(n);
  for (int i = start; i < start + n; ++i) v.push_back(std::to_string(i));
  return v;
}
}  // namespace detail

inline Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
  std::vector<std::pair<std::string, std::string>> es;
  for (int i = 1; i < n; ++i) es.emplace_back(std::to_string(i), std::to_string(i + 1));
  es.emplace_back("1", std::to_string(n));
  return build_graph(detail::numeric_labels(n), es);
}

inline Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path requires n >= 1");
  std::vector<std::pair<std::string, std::string>> es;
  for (int i = 1; i < n; ++i) es.emplace_back(std::to_string(i), std::to_string(i + 1));
  return build_graph(detail::numeric_labels(n), es);
}

inline Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete requires n >= 1");
  std::vector<std::pair<std::string, std::string>> es;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) es.emplace_back(std::to_string(i), std::to_string(j));
  return build_graph(detail::numeric_labels(n), es);
}

inline Graph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("complete_bipartite requires m, n >= 1");
  std::vector<std::string> vs;
  for (int i = 1; i <= m; ++i) vs.push_back("u" + std::to_string(i));
  for (int j = 1; j <= n; ++j) vs.push_back("v" + std::to_string(j));
  std::vector<std::pair<std::string, std::string>> es;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      es.emplace_back("u" + std::to_string(i), "v" + std::to_string(j));
  return build_graph(std::move(vs), es);
}

/// K4 on {1,2,3,4} plus a pendant vertex y attached to 1.
inline Graph k4_prime() {
  return build_graph({"1", "2", "3", "4", "y"},
                     {{"1", "2"}, {"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}, {"3", "4"}, {"1", "y"}});
}

/// 5-cycle v1..v5 plus a hub h adjacent to v1..v4 (not to v5).
inline Graph w5_prime() {
  return build_graph({"v1", "v2", "v3", "v4", "v5", "h"},
                     {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v5"}, {"v1", "v5"},
                      {"v1", "h"}, {"v2", "h"}, {"v3", "h"}, {"v4", "h"}});
}

/// The 7-vertex, 12-edge graph A; the drawing's unlabeled vertices are
/// encoded as 5 and 6 so fixtures stay reproducible.
inline Graph graph_a() {
  return build_graph({"1", "2", "3", "4", "5", "6", "0"},
                     {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "5"}, {"4", "5"},
                      {"1", "6"}, {"3", "6"}, {"4", "6"},
                      {"2", "0"}, {"3", "0"}, {"4", "0"}, {"5", "0"}});
}

/// Mycielski construction: original graph, a primed shadow copy wired to
/// original neighborhoods, and an apex "0" adjacent to every shadow vertex.
inline Graph mycielski(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("mycielski requires a nonempty graph");
  if (g.has_vertex("0"))
    throw std::invalid_argument("mycielski: label \"0\" is reserved for the apex");
  std::vector<std::string> vs = g.labels();
  for (const auto& l : g.labels()) {
    std::string primed = l + "'";
    if (g.has_vertex(primed))
      throw std::invalid_argument("mycielski: label collision with primed copy " + primed);
    vs.push_back(primed);
  }
  vs.push_back("0");
  std::vector<std::pair<std::string, std::string>> es = g.edge_labels();
  for (const auto& l : g.labels()) es.emplace_back("0", l + "'");
  for (auto [u, v] : g.edges()) {
    es.emplace_back(g.label(v), g.label(u) + "'");
    es.emplace_back(g.label(u), g.label(v) + "'");
  }
  return build_graph(std::move(vs), es);
}

/// Line graph: one vertex per edge of g, named "l(u,v)" with u before v in
/// host order; adjacency is sharing an endpoint.
inline Graph line_graph(const Graph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("line_graph requires at least one edge");
  std::vector<std::string> vs;
  vs.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) vs.push_back("l(" + g.label(u) + "," + g.label(v) + ")");
  std::vector<std::vector<int>> incident(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    incident[g.edges()[e].first].push_back(e);
    incident[g.edges()[e].second].push_back(e);
  }
  std::vector<std::pair<std::string, std::string>> es;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& inc = incident[v];
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j)
        es.emplace_back(vs[inc[i]], vs[inc[j]]);
  }
  return build_graph(std::move(vs), es);
}

/// Subgraph induced by the vertex set s (kept in host order; duplicates in s
/// are ignored).
inline Graph induced_subgraph(const Graph& g, const std::vector<std::string>& s) {
  std::vector<char> keep(g.vertex_count(), 0);
  for (const auto& l : s) keep[g.index(l)] = 1;
  std::vector<std::string> vs;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (keep[v]) vs.push_back(g.label(v));
  std::vector<std::pair<std::string, std::string>> es;
  for (auto [u, v] : g.edges())
    if (keep[u] && keep[v]) es.emplace_back(g.label(u), g.label(v));
  return build_graph(std::move(vs), es);
}

inline Graph relabeled(const Graph& g, const std::function<std::string(const std::string&)>& f) {
  std::vector<std::string> vs;
  vs.reserve(g.vertex_count());
  for (const auto& l : g.labels()) vs.push_back(f(l));
  std::vector<std::pair<std::string, std::string>> es;
  es.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) es.emplace_back(vs[u], vs[v]);
  return build_graph(std::move(vs), es);
}

}  // namespace wordrep
