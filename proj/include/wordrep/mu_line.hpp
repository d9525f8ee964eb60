#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "embedding.hpp"
#include "graph.hpp"
#include "orientation.hpp"

namespace wordrep {

/// Structured name for an edge of mu(C_{2n+1}): c(i,j) for an edge of the
/// original odd cycle, a(i,j') for an edge meeting the primed side (i = 0 for
/// apex spokes). The text form is the single source of truth for vertex
/// naming in the line graph, so CLI output is stable.
struct EdgeLabel {
  enum class Kind : unsigned char { cycle, bipartite };
  Kind kind = Kind::cycle;
  int i = 0;
  int j = 0;  // primed index for bipartite labels

  std::string text() const {
    if (kind == Kind::cycle)
      return "c(" + std::to_string(i) + "," + std::to_string(j) + ")";
    return "a(" + std::to_string(i) + "," + std::to_string(j) + "')";
  }

  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

struct LabeledMuCycle {
  Graph graph;                        // mu(C_{2n+1})
  std::vector<EdgeLabel> edge_labels;  // parallel to graph.edges()
};

namespace detail {

inline bool parse_plain_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  out = v;
  return true;
}

}  // namespace detail

/// mu(C_{2n+1}) with every edge labeled: 2n+1 cycle labels c(i,j), 2(2n+1)
/// cross labels and 2n+1 apex spokes a(i,j'), 8n+4 edges in total.
inline LabeledMuCycle labeled_mu_cycle(int n) {
  if (n < 1) throw std::invalid_argument("labeled_mu_cycle requires n >= 1");
  Graph g = mycielski(cycle(2 * n + 1));
  std::vector<EdgeLabel> labels;
  labels.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) {
    const std::string& a = g.label(u);
    const std::string& b = g.label(v);
    auto classify = [&](const std::string& s, bool& primed, int& idx) {
      if (s.size() >= 2 && s.back() == '\'') {
        primed = true;
        return detail::parse_plain_int(s.substr(0, s.size() - 1), idx);
      }
      primed = false;
      return detail::parse_plain_int(s, idx);
    };
    bool ap = false, bp = false;
    int ai = 0, bi = 0;
    if (!classify(a, ap, ai) || !classify(b, bp, bi))
      throw std::logic_error("unexpected vertex label in mu(C): " + a + "," + b);
    if (!ap && !bp) {
      labels.push_back({EdgeLabel::Kind::cycle, std::min(ai, bi), std::max(ai, bi)});
    } else if (ap != bp) {
      int un = ap ? bi : ai;
      int pr = ap ? ai : bi;
      labels.push_back({EdgeLabel::Kind::bipartite, un, pr});
    } else {
      throw std::logic_error("edge between two primed vertices in mu(C)");
    }
  }
  return {std::move(g), std::move(labels)};
}

struct MuLineGraph {
  Graph graph;                          // L(mu(C_{2n+1}))
  std::vector<EdgeLabel> vertex_labels;  // parallel to graph vertices
  int n = 0;
};

/// L(mu(C_{2n+1})) with EdgeLabel-derived vertex names. Two vertices are
/// adjacent exactly when their labels share an index (primed indices only
/// match primed indices).
inline MuLineGraph mu_line_graph(int n) {
  LabeledMuCycle lm = labeled_mu_cycle(n);
  std::vector<std::string> verts;
  verts.reserve(lm.edge_labels.size());
  for (const auto& el : lm.edge_labels) verts.push_back(el.text());
  std::vector<std::vector<int>> incident(lm.graph.vertex_count());
  for (int e = 0; e < lm.graph.edge_count(); ++e) {
    incident[lm.graph.edges()[e].first].push_back(e);
    incident[lm.graph.edges()[e].second].push_back(e);
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (int v = 0; v < lm.graph.vertex_count(); ++v)
    for (std::size_t i = 0; i < incident[v].size(); ++i)
      for (std::size_t j = i + 1; j < incident[v].size(); ++j)
        edges.emplace_back(verts[incident[v][i]], verts[incident[v][j]]);
  return {build_graph(verts, edges), std::move(lm.edge_labels), n};
}

inline Graph line_of_mu(int n) { return mu_line_graph(n).graph; }

/// Vertices of L(mu(C_{2n+1})) carrying bipartite labels, 3(2n+1) of them.
inline std::vector<std::string> b_part(int n) {
  MuLineGraph ml = mu_line_graph(n);
  std::vector<std::string> out;
  for (std::size_t v = 0; v < ml.vertex_labels.size(); ++v)
    if (ml.vertex_labels[v].kind == EdgeLabel::Kind::bipartite)
      out.push_back(ml.graph.label(static_cast<int>(v)));
  return out;
}

/// Vertices carrying cycle labels, 2n+1 of them.
inline std::vector<std::string> c_part(int n) {
  MuLineGraph ml = mu_line_graph(n);
  std::vector<std::string> out;
  for (std::size_t v = 0; v < ml.vertex_labels.size(); ++v)
    if (ml.vertex_labels[v].kind == EdgeLabel::Kind::cycle)
      out.push_back(ml.graph.label(static_cast<int>(v)));
  return out;
}

/// Orientation of L(K_{m,n}) (vertices a(i,j'), i in 1..m, j in 1..n):
/// row cliques ascend in the primed index, column cliques descend in the
/// unprimed index.
inline Orientation rook_orientation(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("rook_orientation requires m, n >= 1");
  std::vector<std::string> verts;
  auto name = [](int i, int j) {
    return "a(" + std::to_string(i) + "," + std::to_string(j) + "')";
  };
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) verts.push_back(name(i, j));
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::pair<std::string, std::string>> arcs;
  for (int i = 1; i <= m; ++i)
    for (int j1 = 1; j1 <= n; ++j1)
      for (int j2 = j1 + 1; j2 <= n; ++j2) {
        edges.emplace_back(name(i, j1), name(i, j2));
        arcs.emplace_back(name(i, j1), name(i, j2));
      }
  for (int j = 1; j <= n; ++j)
    for (int i1 = 1; i1 <= m; ++i1)
      for (int i2 = i1 + 1; i2 <= m; ++i2) {
        edges.emplace_back(name(i1, j), name(i2, j));
        arcs.emplace_back(name(i2, j), name(i1, j));
      }
  return Orientation::from_arcs(build_graph(std::move(verts), edges), arcs);
}

/// The three-step orientation of L(mu(C_{2n+1})), defined for n >= 2:
///   I.  rows ascend in the primed index; columns descend in the unprimed
///       index (the apex row 0 is the smallest);
///   II. on the cycle part, c(i+1,i+2) -> c(i,i+1) for 1 <= i <= 2n-1, plus
///       c(1,2n+1) -> c(1,2) and c(2n,2n+1) -> c(1,2n+1);
///   III. every edge between the parts leaves the bipartite-labeled vertex.
inline Orientation orientation_d(int n) {
  if (n < 2)
    throw std::invalid_argument(
        "orientation_d requires n >= 2; the n = 1 line graph admits no semi-transitive "
        "orientation");
  MuLineGraph ml = mu_line_graph(n);
  const int top = 2 * n + 1;
  std::vector<ArcDir> dirs;
  dirs.reserve(ml.graph.edge_count());
  for (auto [u, v] : ml.graph.edges()) {
    const EdgeLabel& x = ml.vertex_labels[u];
    const EdgeLabel& y = ml.vertex_labels[v];
    auto forward_if = [&](bool tail_is_x) { return tail_is_x ? ArcDir::forward : ArcDir::backward; };
    if (x.kind == EdgeLabel::Kind::bipartite && y.kind == EdgeLabel::Kind::bipartite) {
      if (x.i == y.i) dirs.push_back(forward_if(x.j < y.j));       // row
      else dirs.push_back(forward_if(x.i > y.i));                  // column
    } else if (x.kind == EdgeLabel::Kind::cycle && y.kind == EdgeLabel::Kind::cycle) {
      auto is = [&](const EdgeLabel& e, int a, int b) { return e.i == a && e.j == b; };
      bool x_tail;
      if (is(x, 1, 2) && is(y, 1, top)) x_tail = false;
      else if (is(y, 1, 2) && is(x, 1, top)) x_tail = true;
      else if (is(x, 1, top) && is(y, top - 1, top)) x_tail = false;
      else if (is(y, 1, top) && is(x, top - 1, top)) x_tail = true;
      else x_tail = x.i > y.i;  // consecutive cycle labels c(i,i+1), c(i+1,i+2)
      dirs.push_back(forward_if(x_tail));
    } else {
      dirs.push_back(forward_if(x.kind == EdgeLabel::Kind::bipartite));
    }
  }
  return Orientation::from_dirs(ml.graph, std::move(dirs));
}

/// Row cliques L_i (bipartite labels sharing the unprimed index i, ascending
/// j) and column cliques L'_j (sharing the primed index j, ascending i).
/// rows[i] for 0 <= i <= 2n+1; columns[j] for 1 <= j <= 2n+1 (columns[0] is
/// empty padding).
struct LevelSets {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::vector<std::string>> columns;
};

inline LevelSets level_sets(int n) {
  if (n < 1) throw std::invalid_argument("level_sets requires n >= 1");
  MuLineGraph ml = mu_line_graph(n);
  LevelSets ls;
  ls.rows.assign(2 * n + 2, {});
  ls.columns.assign(2 * n + 2, {});
  std::vector<std::pair<std::pair<int, int>, std::string>> bip;
  for (std::size_t v = 0; v < ml.vertex_labels.size(); ++v) {
    const EdgeLabel& el = ml.vertex_labels[v];
    if (el.kind == EdgeLabel::Kind::bipartite)
      bip.push_back({{el.i, el.j}, ml.graph.label(static_cast<int>(v))});
  }
  std::sort(bip.begin(), bip.end());
  for (const auto& [ij, label] : bip) ls.rows[ij.first].push_back(label);
  std::sort(bip.begin(), bip.end(), [](const auto& a, const auto& b) {
    return std::make_pair(a.first.second, a.first.first) <
           std::make_pair(b.first.second, b.first.first);
  });
  for (const auto& [ij, label] : bip) ls.columns[ij.second].push_back(label);
  return ls;
}

struct RemarkClause {
  std::string id;
  std::string description;
  bool pass = false;
  std::string counterexample;  // empty when the clause passes
};

struct RemarkReport {
  int n = 0;
  std::vector<RemarkClause> clauses;
  bool all_pass() const {
    return std::all_of(clauses.begin(), clauses.end(),
                       [](const RemarkClause& c) { return c.pass; });
  }
};

namespace detail {

inline std::string path_string(const Graph& g, const std::vector<int>& path) {
  std::string s;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) s += " -> ";
    s += g.label(path[i]);
  }
  return s;
}

}  // namespace detail

/// Evaluates the reachability clauses of the layered orientation by direct
/// computation. R4.* run inside the bipartite part; R5 runs on the whole
/// orientation; R6 scans arcs between the parts.
///
/// Clause R4.iv excludes the apex row from its targets: row-0 arcs step
/// through every column in order, so column adjacency can only be forbidden
/// for the cross vertices (which are the only ones shortcut paths between
/// the parts can use).
inline RemarkReport check_remarks_on(const Orientation& d, int n) {
  if (n < 2) throw std::invalid_argument("check_remarks requires n >= 2");
  const int top = 2 * n + 1;
  LevelSets ls = level_sets(n);
  RemarkReport report;
  report.n = n;

  Orientation db = restrict_orientation(d, b_part(n));
  auto out_b = db.out_adjacency();
  auto reach_b = detail::strict_reachability(out_b, db.base().vertex_count());
  auto out_full = d.out_adjacency();
  auto reach_full = detail::strict_reachability(out_full, d.base().vertex_count());

  auto no_path_clause = [&](const std::string& id, const std::string& desc,
                            const std::vector<std::pair<std::string, std::string>>& pairs) {
    RemarkClause c{id, desc, true, ""};
    for (const auto& [from, to] : pairs) {
      int u = db.base().index(from);
      int v = db.base().index(to);
      if (reach_b[u][v]) {
        auto p = detail::shortest_directed_path(out_b, u, v);
        c.pass = false;
        c.counterexample = detail::path_string(db.base(), *p);
        break;
      }
    }
    report.clauses.push_back(std::move(c));
  };

  std::vector<std::pair<std::string, std::string>> pairs;

  // R4.i: no directed path from a row to any higher row.
  pairs.clear();
  for (int i = 0; i <= top; ++i)
    for (int j = i + 1; j <= top; ++j)
      for (const auto& x : ls.rows[i])
        for (const auto& y : ls.rows[j]) pairs.emplace_back(x, y);
  no_path_clause("R4.i", "no path from row i to row j for j > i", pairs);

  // R4.ii: no directed path from row i down to the adjacent row i-1 (i >= 2).
  pairs.clear();
  for (int i = 2; i <= top; ++i)
    for (const auto& x : ls.rows[i])
      for (const auto& y : ls.rows[i - 1]) pairs.emplace_back(x, y);
  no_path_clause("R4.ii", "no path from row i to row i-1 for 2 <= i <= 2n+1", pairs);

  // R4.iii: no directed path from a column to any lower column.
  pairs.clear();
  for (int i = 1; i <= top; ++i)
    for (int j = 1; j < i; ++j)
      for (const auto& x : ls.columns[i])
        for (const auto& y : ls.columns[j]) pairs.emplace_back(x, y);
  no_path_clause("R4.iii", "no path from column i to column j for j < i", pairs);

  // R4.iv: no directed path from column i to the adjacent column i+1, apex
  // row excluded from the targets.
  pairs.clear();
  for (int i = 1; i <= top - 1; ++i)
    for (const auto& x : ls.columns[i])
      for (const auto& y : ls.columns[i + 1]) {
        if (y.rfind("a(0,", 0) == 0) continue;
        pairs.emplace_back(x, y);
      }
  no_path_clause("R4.iv",
                 "no path from column i to column i+1 for 1 <= i <= 2n (cross targets)", pairs);

  // R5: every row with index >= i reaches c(i,i+1); rows 1, 2n and 2n+1
  // reach c(1,2n+1).
  {
    RemarkClause c{"R5", "rows reach the cycle vertices below them", true, ""};
    auto cyc = [&](int a, int b) {
      return "c(" + std::to_string(a) + "," + std::to_string(b) + ")";
    };
    auto expect_path = [&](const std::string& from, const std::string& to) {
      if (!c.pass) return;
      int u = d.base().index(from);
      int v = d.base().index(to);
      if (!reach_full[u][v]) {
        c.pass = false;
        c.counterexample = "no path from " + from + " to " + to;
      }
    };
    for (int i = 2; i <= 2 * n; ++i)
      for (int j = i; j <= top; ++j)
        for (const auto& a : ls.rows[j]) expect_path(a, cyc(i, i + 1));
    for (int j : {1, 2 * n, top})
      for (const auto& a : ls.rows[j]) expect_path(a, cyc(1, top));
    report.clauses.push_back(std::move(c));
  }

  // R6: no arc from the cycle part into the bipartite part.
  {
    RemarkClause c{"R6", "no arc from the cycle part to the bipartite part", true, ""};
    auto is_cycle_vertex = [&](int v) { return d.base().label(v).rfind("c(", 0) == 0; };
    for (auto [t, h] : d.arcs()) {
      if (is_cycle_vertex(t) && !is_cycle_vertex(h)) {
        c.pass = false;
        c.counterexample = d.base().label(t) + " -> " + d.base().label(h);
        break;
      }
    }
    report.clauses.push_back(std::move(c));
  }

  return report;
}

inline RemarkReport check_remarks(int n) { return check_remarks_on(orientation_d(n), n); }

}  // namespace wordrep
