#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace wordrep {

enum class ArcDir : signed char { forward = 1, backward = -1 };  // relative to the (lo, hi) edge

/// A direction for every edge of a base graph.
class Orientation {
 public:
  Orientation() = default;

  static Orientation from_dirs(Graph base, std::vector<ArcDir> dirs) {
    if (static_cast<int>(dirs.size()) != base.edge_count())
      throw std::invalid_argument("orientation must direct every edge exactly once");
    Orientation d;
    d.base_ = std::move(base);
    d.dirs_ = std::move(dirs);
    return d;
  }

  static Orientation from_arcs(Graph base,
                               const std::vector<std::pair<std::string, std::string>>& arcs) {
    std::vector<std::optional<ArcDir>> dirs(base.edge_count());
    for (const auto& [tail, head] : arcs) {
      int t = base.index(tail), h = base.index(head);
      auto id = base.edge_id(t, h);
      if (!id) throw std::invalid_argument("arc over a non-edge: " + tail + " -> " + head);
      if (dirs[*id]) throw std::invalid_argument("edge directed twice: " + tail + " -> " + head);
      dirs[*id] = (base.edges()[*id].first == t) ? ArcDir::forward : ArcDir::backward;
    }
    std::vector<ArcDir> out;
    out.reserve(dirs.size());
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      if (!dirs[i]) {
        auto [u, v] = base.edges()[i];
        throw std::invalid_argument("edge left undirected: {" + base.label(u) + "," +
                                    base.label(v) + "}");
      }
      out.push_back(*dirs[i]);
    }
    return from_dirs(std::move(base), std::move(out));
  }

  const Graph& base() const { return base_; }
  int arc_count() const { return base_.edge_count(); }

  std::pair<int, int> arc(int edge_id) const {
    auto [u, v] = base_.edges().at(edge_id);
    return dirs_[edge_id] == ArcDir::forward ? std::make_pair(u, v) : std::make_pair(v, u);
  }

  std::vector<std::pair<int, int>> arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(arc_count());
    for (int e = 0; e < arc_count(); ++e) out.push_back(arc(e));
    return out;
  }

  std::vector<std::pair<std::string, std::string>> arc_labels() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(arc_count());
    for (auto [t, h] : arcs()) out.emplace_back(base_.label(t), base_.label(h));
    return out;
  }

  bool has_arc(int tail, int head) const {
    auto id = base_.edge_id(tail, head);
    if (!id) return false;
    return arc(*id) == std::make_pair(tail, head);
  }

  bool has_arc(std::string_view tail, std::string_view head) const {
    auto t = base_.try_index(tail);
    auto h = base_.try_index(head);
    return t && h && has_arc(*t, *h);
  }

  std::vector<std::vector<int>> out_adjacency() const {
    std::vector<std::vector<int>> out(base_.vertex_count());
    for (auto [t, h] : arcs()) out[t].push_back(h);
    for (auto& row : out) std::sort(row.begin(), row.end());
    return out;
  }

  friend bool operator==(const Orientation& a, const Orientation& b) {
    return a.base_ == b.base_ && a.dirs_ == b.dirs_;
  }
  friend bool operator!=(const Orientation& a, const Orientation& b) { return !(a == b); }

 private:
  Graph base_;
  std::vector<ArcDir> dirs_;
};

/// An orientation with a decided part and a free part.
class PartialOrientation {
 public:
  static PartialOrientation all_free(Graph base) {
    PartialOrientation p;
    p.state_.assign(base.edge_count(), 0);
    p.base_ = std::move(base);
    return p;
  }

  static PartialOrientation of(const Orientation& d) {
    PartialOrientation p = all_free(d.base());
    for (int e = 0; e < d.arc_count(); ++e) {
      auto [t, h] = d.arc(e);
      p.state_[e] = (d.base().edges()[e].first == t) ? 1 : -1;
      (void)h;
    }
    return p;
  }

  /// Copy with one more edge directed tail -> head.
  PartialOrientation oriented(const std::string& tail, const std::string& head) const {
    PartialOrientation p = *this;
    int t = base_.index(tail), h = base_.index(head);
    auto id = base_.edge_id(t, h);
    if (!id) throw std::invalid_argument("no edge {" + tail + "," + head + "}");
    if (p.state_[*id] != 0)
      throw std::invalid_argument("edge already directed: {" + tail + "," + head + "}");
    p.state_[*id] = (base_.edges()[*id].first == t) ? 1 : -1;
    return p;
  }

  const Graph& base() const { return base_; }
  // 0 free, 1 forward (lo->hi), -1 backward
  const std::vector<signed char>& states() const { return state_; }

  int free_count() const {
    return static_cast<int>(std::count(state_.begin(), state_.end(), 0));
  }
  int directed_count() const { return base_.edge_count() - free_count(); }

  std::vector<std::pair<std::string, std::string>> directed_arcs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (int e = 0; e < base_.edge_count(); ++e) {
      if (state_[e] == 0) continue;
      auto [u, v] = base_.edges()[e];
      if (state_[e] > 0) out.emplace_back(base_.label(u), base_.label(v));
      else out.emplace_back(base_.label(v), base_.label(u));
    }
    return out;
  }

  std::vector<std::pair<std::string, std::string>> free_edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (int e = 0; e < base_.edge_count(); ++e)
      if (state_[e] == 0) {
        auto [u, v] = base_.edges()[e];
        out.emplace_back(base_.label(u), base_.label(v));
      }
    return out;
  }

 private:
  Graph base_;
  std::vector<signed char> state_;
};

inline bool is_acyclic(const Orientation& d);

/// Directed path v0..vk (k >= 3, distinct vertices) with the shortcutting arc
/// v0 -> vk present and the arc v_i -> v_j missing for the recorded pair.
/// Components are verified against the orientation on construction.
struct ShortcutWitness {
  std::vector<std::string> path;
  std::pair<int, int> missing_pair;  // indices into path, (i, j) != (0, k), i < j

  static ShortcutWitness checked(const Orientation& d, std::vector<std::string> path,
                                 std::pair<int, int> missing) {
    ShortcutWitness w{std::move(path), missing};
    w.verify(d);
    return w;
  }

  void verify(const Orientation& d) const {
    int k = static_cast<int>(path.size()) - 1;
    if (k < 3) throw std::invalid_argument("shortcut path needs at least 4 vertices");
    std::vector<int> idx;
    for (const auto& l : path) idx.push_back(d.base().index(l));
    std::vector<int> sorted(idx);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("shortcut path vertices must be distinct");
    for (int i = 0; i < k; ++i)
      if (!d.has_arc(idx[i], idx[i + 1]))
        throw std::invalid_argument("missing path arc " + path[i] + " -> " + path[i + 1]);
    if (!d.has_arc(idx[0], idx[k]))
      throw std::invalid_argument("missing shortcutting arc " + path[0] + " -> " + path[k]);
    auto [i, j] = missing_pair;
    if (!(0 <= i && i < j && j <= k) || (i == 0 && j == k))
      throw std::invalid_argument("bad missing pair indices");
    if (d.has_arc(idx[i], idx[j]))
      throw std::invalid_argument("claimed missing arc is present: " + path[i] + " -> " + path[j]);
  }
};

namespace detail {

// Strict reachability matrix of a DAG (x reaches y via >= 1 arc).
inline std::vector<std::vector<char>> strict_reachability(
    const std::vector<std::vector<int>>& out, int n) {
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  // memoized DFS; the digraph is acyclic
  std::vector<char> done(n, 0);
  auto visit = [&](auto&& self, int v) -> void {
    if (done[v]) return;
    done[v] = 1;
    for (int w : out[v]) {
      self(self, w);
      reach[v][w] = 1;
      for (int z = 0; z < n; ++z)
        if (reach[w][z]) reach[v][z] = 1;
    }
  };
  for (int v = 0; v < n; ++v) visit(visit, v);
  return reach;
}

inline std::optional<std::vector<int>> shortest_directed_path(
    const std::vector<std::vector<int>>& out, int src, int dst) {
  if (src == dst) return std::vector<int>{src};
  std::vector<int> prev(out.size(), -1);
  std::queue<int> q;
  q.push(src);
  std::vector<char> seen(out.size(), 0);
  seen[src] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : out[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      prev[w] = v;
      if (w == dst) {
        std::vector<int> path{dst};
        for (int x = dst; x != src; x = prev[x]) path.push_back(prev[x]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      q.push(w);
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline bool is_acyclic(const Orientation& d) {
  int n = d.base().vertex_count();
  std::vector<int> indeg(n, 0);
  auto out = d.out_adjacency();
  for (int v = 0; v < n; ++v)
    for (int w : out[v]) ++indeg[w];
  std::priority_queue<int, std::vector<int>, std::greater<>> q;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) q.push(v);
  int emitted = 0;
  while (!q.empty()) {
    int v = q.top();
    q.pop();
    ++emitted;
    for (int w : out[v])
      if (--indeg[w] == 0) q.push(w);
  }
  return emitted == n;
}

/// Canonical topological order (smallest vertex index first among sources),
/// or none when the orientation has a directed cycle.
inline std::optional<std::vector<std::string>> topological_order(const Orientation& d) {
  int n = d.base().vertex_count();
  std::vector<int> indeg(n, 0);
  auto out = d.out_adjacency();
  for (int v = 0; v < n; ++v)
    for (int w : out[v]) ++indeg[w];
  std::priority_queue<int, std::vector<int>, std::greater<>> q;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) q.push(v);
  std::vector<std::string> order;
  while (!q.empty()) {
    int v = q.top();
    q.pop();
    order.push_back(d.base().label(v));
    for (int w : out[v])
      if (--indeg[w] == 0) q.push(w);
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

/// Between-set shortcut detection. For each arc u -> v, every ordered pair
/// (x, y) of vertices lying on directed u-v paths must carry the arc x -> y
/// whenever x reaches y; any violation splices into a witness path
/// u ... x ... y ... v of length >= 3. Polynomial; the brute-force oracle
/// below cross-checks it at small scale.
inline std::optional<ShortcutWitness> find_shortcut(const Orientation& d) {
  if (!is_acyclic(d)) throw std::invalid_argument("find_shortcut requires an acyclic orientation");
  int n = d.base().vertex_count();
  auto out = d.out_adjacency();
  auto reach = detail::strict_reachability(out, n);

  for (int e = 0; e < d.arc_count(); ++e) {
    auto [u, v] = d.arc(e);
    std::vector<int> between;
    for (int x = 0; x < n; ++x)
      if ((x == u || reach[u][x]) && (x == v || reach[x][v])) between.push_back(x);
    for (int x : between) {
      for (int y : between) {
        if (x == y || !reach[x][y]) continue;
        if (d.has_arc(x, y)) continue;
        // splice u ~> x ~> y ~> v; the segments only share their endpoints
        auto p1 = detail::shortest_directed_path(out, u, x);
        auto p2 = detail::shortest_directed_path(out, x, y);
        auto p3 = detail::shortest_directed_path(out, y, v);
        std::vector<int> full(*p1);
        full.insert(full.end(), p2->begin() + 1, p2->end());
        full.insert(full.end(), p3->begin() + 1, p3->end());
        std::vector<std::string> labels;
        int xi = -1, yi = -1;
        for (int i = 0; i < static_cast<int>(full.size()); ++i) {
          labels.push_back(d.base().label(full[i]));
          if (full[i] == x) xi = i;
          if (full[i] == y) yi = i;
        }
        return ShortcutWitness::checked(d, std::move(labels), {xi, yi});
      }
    }
  }
  return std::nullopt;
}

/// Enumerates every directed path on >= 4 distinct vertices and reports the
/// first one whose endpoints carry an arc while some forward arc inside the
/// path is missing. Oracle for find_shortcut; guarded to 12 vertices.
inline std::optional<ShortcutWitness> find_shortcut_bruteforce(const Orientation& d,
                                                               bool override_guard = false) {
  if (!override_guard && d.base().vertex_count() > 12)
    throw scale_guard_error("find_shortcut_bruteforce limited to 12 vertices");
  if (!is_acyclic(d))
    throw std::invalid_argument("find_shortcut_bruteforce requires an acyclic orientation");
  auto out = d.out_adjacency();
  std::vector<int> pathv;
  std::vector<char> on(d.base().vertex_count(), 0);
  std::optional<ShortcutWitness> found;

  auto inspect = [&]() -> bool {
    int k = static_cast<int>(pathv.size()) - 1;
    if (k < 3 || !d.has_arc(pathv[0], pathv[k])) return false;
    for (int i = 0; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        if (i == 0 && j == k) continue;
        if (!d.has_arc(pathv[i], pathv[j])) {
          std::vector<std::string> labels;
          for (int v : pathv) labels.push_back(d.base().label(v));
          found = ShortcutWitness::checked(d, std::move(labels), {i, j});
          return true;
        }
      }
    return false;
  };

  auto dfs = [&](auto&& self, int v) -> bool {
    pathv.push_back(v);
    on[v] = 1;
    if (inspect()) return true;
    for (int w : out[v]) {
      if (on[w]) continue;
      if (self(self, w)) return true;
    }
    on[v] = 0;
    pathv.pop_back();
    return false;
  };

  for (int s = 0; s < d.base().vertex_count(); ++s) {
    pathv.clear();
    std::fill(on.begin(), on.end(), 0);
    if (dfs(dfs, s)) return found;
  }
  return std::nullopt;
}

inline bool is_semi_transitive(const Orientation& d) {
  if (!is_acyclic(d)) return false;
  return !find_shortcut(d).has_value();
}

/// Orientation of the induced subgraph on s, keeping directions.
inline Orientation restrict_orientation(const Orientation& d, const std::vector<std::string>& s) {
  Graph sub = induced_subgraph(d.base(), s);
  std::vector<ArcDir> dirs;
  dirs.reserve(sub.edge_count());
  for (auto [u, v] : sub.edges()) {
    int du = d.base().index(sub.label(u));
    int dv = d.base().index(sub.label(v));
    dirs.push_back(d.has_arc(du, dv) ? ArcDir::forward : ArcDir::backward);
  }
  return Orientation::from_dirs(std::move(sub), std::move(dirs));
}

inline Orientation reversed(const Orientation& d) {
  std::vector<ArcDir> dirs;
  dirs.reserve(d.arc_count());
  for (int e = 0; e < d.arc_count(); ++e) {
    auto [t, h] = d.arc(e);
    bool fwd = d.base().edges()[e].first == t;
    dirs.push_back(fwd ? ArcDir::backward : ArcDir::forward);
    (void)h;
  }
  return Orientation::from_dirs(d.base(), std::move(dirs));
}

}  // namespace wordrep
