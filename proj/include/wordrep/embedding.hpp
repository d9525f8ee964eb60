#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace wordrep {

enum class EmbedMode { subgraph, induced };

/// Injective map from pattern vertices to host vertices. In subgraph mode
/// every pattern edge maps to a host edge; induced mode additionally maps
/// every pattern non-edge to a host non-edge.
struct Embedding {
  EmbedMode mode = EmbedMode::subgraph;
  std::vector<int> map;  // pattern vertex index -> host vertex index

  std::vector<std::pair<std::string, std::string>> label_pairs(const Graph& pattern,
                                                               const Graph& host) const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(map.size());
    for (int u = 0; u < static_cast<int>(map.size()); ++u)
      out.emplace_back(pattern.label(u), host.label(map[u]));
    return out;
  }
};

inline bool embedding_valid(const Graph& pattern, const Graph& host, const Embedding& e) {
  if (static_cast<int>(e.map.size()) != pattern.vertex_count()) return false;
  std::vector<char> used(host.vertex_count(), 0);
  for (int img : e.map) {
    if (img < 0 || img >= host.vertex_count() || used[img]) return false;
    used[img] = 1;
  }
  for (int u = 0; u < pattern.vertex_count(); ++u)
    for (int v = u + 1; v < pattern.vertex_count(); ++v) {
      bool pe = pattern.has_edge(u, v);
      bool he = host.has_edge(e.map[u], e.map[v]);
      if (pe && !he) return false;
      if (e.mode == EmbedMode::induced && !pe && he) return false;
    }
  return true;
}

namespace detail {

struct EmbedSearch {
  const Graph& pattern;
  const Graph& host;
  EmbedMode mode;
  std::vector<int> order;   // pattern vertices, highest degree first
  std::vector<int> map;     // pattern index -> host index or -1
  std::vector<char> used;   // host vertex taken

  EmbedSearch(const Graph& p, const Graph& h, EmbedMode m) : pattern(p), host(h), mode(m) {
    order.resize(p.vertex_count());
    for (int i = 0; i < p.vertex_count(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (p.degree(a) != p.degree(b)) return p.degree(a) > p.degree(b);
      return a < b;
    });
    map.assign(p.vertex_count(), -1);
    used.assign(h.vertex_count(), 0);
  }

  bool consistent(int u, int cand) const {
    if (host.degree(cand) < pattern.degree(u)) return false;
    for (int w = 0; w < pattern.vertex_count(); ++w) {
      if (map[w] < 0) continue;
      bool pe = pattern.has_edge(u, w);
      if (pe && !host.has_edge(cand, map[w])) return false;
      if (mode == EmbedMode::induced && !pe && host.has_edge(cand, map[w])) return false;
    }
    return true;
  }

  bool run(std::size_t depth) {
    if (depth == order.size()) return true;
    int u = order[depth];
    for (int cand = 0; cand < host.vertex_count(); ++cand) {
      if (used[cand] || !consistent(u, cand)) continue;
      map[u] = cand;
      used[cand] = 1;
      if (run(depth + 1)) return true;
      used[cand] = 0;
      map[u] = -1;
    }
    return false;
  }
};

}  // namespace detail

/// Backtracking search for an embedding of pattern into host. Deterministic:
/// pattern vertices are tried by descending degree, host candidates in vertex
/// order. The returned mapping is re-verified before being handed out.
inline std::optional<Embedding> find_embedding(const Graph& pattern, const Graph& host,
                                               EmbedMode mode) {
  if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
  detail::EmbedSearch s(pattern, host, mode);
  if (!s.run(0)) return std::nullopt;
  Embedding e{mode, s.map};
  if (!embedding_valid(pattern, host, e))
    throw std::logic_error("find_embedding produced an invalid mapping");
  return e;
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  // An injective induced embedding between equal-sized graphs is a bijection
  // whose inverse is induced as well.
  return find_embedding(a, b, EmbedMode::induced).has_value();
}

}  // namespace wordrep
