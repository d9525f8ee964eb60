#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "wordrep/embedding.hpp"
#include "wordrep/mu_line.hpp"
#include "wordrep/orientation.hpp"
#include "wordrep/verify.hpp"

using namespace wordrep;

namespace {

// (i, j, primed?) from labels like "a(3,2')" and "c(1,2)"; test-side parser,
// independent of EdgeLabel.
struct ParsedLabel {
  char kind;
  int i, j;
};

ParsedLabel parse_label(const std::string& s) {
  ParsedLabel p{};
  p.kind = s[0];
  auto comma = s.find(',');
  p.i = std::stoi(s.substr(2, comma - 2));
  p.j = std::stoi(s.substr(comma + 1));
  return p;
}

}  // namespace

TEST_CASE("labeled_mu_cycle counts and labeling") {
  auto lm1 = labeled_mu_cycle(1);
  CHECK(lm1.graph.vertex_count() == 7);
  CHECK(lm1.graph.edge_count() == 12);
  auto lm2 = labeled_mu_cycle(2);
  CHECK(lm2.graph.edge_count() == 20);

  int cycles = 0, spokes = 0, crosses = 0;
  for (std::size_t e = 0; e < lm2.edge_labels.size(); ++e) {
    const EdgeLabel& el = lm2.edge_labels[e];
    if (el.kind == EdgeLabel::Kind::cycle) ++cycles;
    else if (el.i == 0) ++spokes;
    else ++crosses;
    // the label names exactly the edge's endpoints
    auto [u, v] = lm2.graph.edges()[e];
    std::set<std::string> ends = {lm2.graph.label(u), lm2.graph.label(v)};
    if (el.kind == EdgeLabel::Kind::cycle)
      CHECK(ends == std::set<std::string>{std::to_string(el.i), std::to_string(el.j)});
    else
      CHECK(ends == std::set<std::string>{std::to_string(el.i), std::to_string(el.j) + "'"});
  }
  CHECK(cycles == 5);
  CHECK(spokes == 5);
  CHECK(crosses == 10);
  CHECK_THROWS_AS(labeled_mu_cycle(0), std::invalid_argument);
}

TEST_CASE("line_of_mu adjacency follows the shared-index rule") {
  Graph l = line_of_mu(2);
  CHECK(l.vertex_count() == 20);
  CHECK(l.edge_count() == 55);
  CHECK(l.has_edge("a(1,2')", "c(1,2)"));
  CHECK(l.has_edge("a(0,1')", "a(0,2')"));
  CHECK(l.has_edge("a(4,5')", "a(1,5')"));
  CHECK_FALSE(l.has_edge("a(0,1')", "c(1,2)"));  // apex spokes never meet the cycle

  // independent reconstruction: vertices adjacent iff indices overlap,
  // primed slots only matching primed slots
  for (int u = 0; u < l.vertex_count(); ++u)
    for (int v = u + 1; v < l.vertex_count(); ++v) {
      ParsedLabel a = parse_label(l.label(u));
      ParsedLabel b = parse_label(l.label(v));
      bool expect = false;
      if (a.kind == 'c' && b.kind == 'c')
        expect = a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j;
      else if (a.kind == 'a' && b.kind == 'a')
        expect = a.i == b.i || a.j == b.j;
      else {
        const ParsedLabel& c = a.kind == 'c' ? a : b;
        const ParsedLabel& w = a.kind == 'c' ? b : a;
        expect = w.i == c.i || w.i == c.j;
      }
      CHECK(l.has_edge(u, v) == expect);
    }

  // structurally the line graph of the labeled Mycielski graph
  CHECK(are_isomorphic(l, line_graph(labeled_mu_cycle(2).graph)));
}

TEST_CASE("b_part and c_part partition the line graph") {
  for (int n = 1; n <= 3; ++n) {
    auto b = b_part(n);
    auto c = c_part(n);
    CHECK(static_cast<int>(b.size()) == 3 * (2 * n + 1));
    CHECK(static_cast<int>(c.size()) == 2 * n + 1);
    CHECK(static_cast<int>(b.size() + c.size()) == line_of_mu(n).vertex_count());
    CHECK(are_isomorphic(induced_subgraph(line_of_mu(n), c), cycle(2 * n + 1)));
  }
}

TEST_CASE("rook orientation") {
  Orientation r22 = rook_orientation(2, 2);
  CHECK(r22.base().vertex_count() == 4);
  CHECK(r22.arc_count() == 4);
  CHECK(is_semi_transitive(r22));
  CHECK(rook_orientation(3, 2).has_arc("a(2,1')", "a(1,1')"));
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      Orientation r = rook_orientation(m, n);
      CHECK(is_semi_transitive(r));
      CHECK(are_isomorphic(r.base(), line_graph(complete_bipartite(m, n))));
    }
}

TEST_CASE("orientation_d arc rules") {
  CHECK_THROWS_AS(orientation_d(1), std::invalid_argument);
  Orientation d = orientation_d(2);
  CHECK(d.has_arc("a(3,2')", "a(1,2')"));
  CHECK(d.has_arc("c(2,3)", "c(1,2)"));
  CHECK(d.has_arc("a(1,2')", "c(1,2)"));

  // every cross arc leaves the bipartite part
  for (const auto& [t, h] : d.arc_labels()) {
    bool tc = t[0] == 'c', hc = h[0] == 'c';
    if (tc != hc) CHECK((!tc && hc));
  }

  // c(1,2) is the unique sink of the cycle part
  Orientation dc = restrict_orientation(d, c_part(2));
  int sinks = 0;
  auto out = dc.out_adjacency();
  for (int v = 0; v < dc.base().vertex_count(); ++v)
    if (out[v].empty()) {
      ++sinks;
      CHECK(dc.base().label(v) == "c(1,2)");
    }
  CHECK(sinks == 1);
}

TEST_CASE("orientation_d(2) equals the frozen 55-arc fixture") {
  std::set<std::pair<std::string, std::string>> got;
  for (const auto& a : orientation_d(2).arc_labels()) got.insert(a);
  std::set<std::pair<std::string, std::string>> want(
      verify_detail::d2_arc_fixture().begin(), verify_detail::d2_arc_fixture().end());
  CHECK(got == want);
}

TEST_CASE("part restrictions of orientation_d stay semi-transitive") {
  for (int n = 2; n <= 3; ++n) {
    Orientation d = orientation_d(n);
    CHECK(is_semi_transitive(restrict_orientation(d, b_part(n))));
    CHECK(is_semi_transitive(restrict_orientation(d, c_part(n))));
  }
}

TEST_CASE("rook orientation is hereditarily semi-transitive") {
  // all 512 vertex subsets of the 9-vertex rook orientation
  Orientation r = rook_orientation(3, 3);
  int n = r.base().vertex_count();
  REQUIRE(n == 9);
  int bad = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::string> s;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(r.base().label(v));
    if (!is_semi_transitive(restrict_orientation(r, s))) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("b-part restriction matches the rook orientation with shifted rows") {
  for (int n = 2; n <= 3; ++n) {
    Orientation db = restrict_orientation(orientation_d(n), b_part(n));
    Orientation rook = rook_orientation(2 * n + 2, 2 * n + 1);
    auto shift = [](const std::string& label) {
      ParsedLabel p = parse_label(label);
      return "a(" + std::to_string(p.i + 1) + "," + std::to_string(p.j) + "')";
    };
    std::vector<std::string> image;
    for (const auto& l : db.base().labels()) image.push_back(shift(l));
    Orientation rook_restricted = restrict_orientation(rook, image);
    std::set<std::pair<std::string, std::string>> a, b;
    for (const auto& [t, h] : db.arc_labels()) a.insert({shift(t), shift(h)});
    for (const auto& arc : rook_restricted.arc_labels()) b.insert(arc);
    CHECK(a == b);
  }
}

TEST_CASE("the four clique quadruples are transitive tournaments in order") {
  for (int n = 2; n <= 4; ++n) {
    Orientation d = orientation_d(n);
    const Graph& g = d.base();
    const int top = 2 * n + 1;
    auto a_of = [](int i, int j) {
      return "a(" + std::to_string(i) + "," + std::to_string(j) + "')";
    };
    auto c_of = [](int i, int j) {
      return "c(" + std::to_string(i) + "," + std::to_string(j) + ")";
    };
    std::vector<std::vector<std::string>> quads = {
        {a_of(1, 2), a_of(1, top), c_of(1, top), c_of(1, 2)},
        {a_of(2, 1), a_of(2, 3), c_of(2, 3), c_of(1, 2)},
        {a_of(top, 1), a_of(top, top - 1), c_of(top - 1, top), c_of(1, top)},
    };
    for (int i = 1; i <= 2 * n - 1; ++i)
      quads.push_back({a_of(i + 1, i), a_of(i + 1, i + 2), c_of(i + 1, i + 2), c_of(i, i + 1)});
    for (const auto& q : quads) {
      for (std::size_t x = 0; x < q.size(); ++x)
        for (std::size_t y = x + 1; y < q.size(); ++y) {
          CHECK(g.has_edge(q[x], q[y]));
          CHECK(d.has_arc(q[x], q[y]));
        }
    }
  }
}

TEST_CASE("level sets for n = 2") {
  LevelSets ls = level_sets(2);
  CHECK(ls.rows[1] == std::vector<std::string>{"a(1,2')", "a(1,5')"});
  CHECK(ls.columns[5] == std::vector<std::string>{"a(0,5')", "a(1,5')", "a(4,5')"});
  CHECK(ls.rows[0].size() == 5);

  // rows partition the bipartite part
  std::set<std::string> from_rows;
  for (const auto& row : ls.rows)
    for (const auto& l : row) CHECK(from_rows.insert(l).second);
  auto b = b_part(2);
  CHECK(from_rows == std::set<std::string>(b.begin(), b.end()));
}

TEST_CASE("reachability clauses pass and catch mutations") {
  for (int n = 2; n <= 3; ++n) {
    RemarkReport rep = check_remarks(n);
    CHECK(rep.all_pass());
    CHECK(rep.clauses.size() == 6);
  }

  // flipping one cross arc must trip the R6 clause with a witness arc
  Orientation d = orientation_d(2);
  const Graph& g = d.base();
  std::vector<ArcDir> dirs;
  for (int e = 0; e < d.arc_count(); ++e) {
    auto [t, h] = d.arc(e);
    ArcDir dir = g.edges()[e].first == t ? ArcDir::forward : ArcDir::backward;
    if (g.label(t) == "a(1,2')" && g.label(h) == "c(1,2)")
      dir = dir == ArcDir::forward ? ArcDir::backward : ArcDir::forward;
    dirs.push_back(dir);
  }
  RemarkReport mutated = check_remarks_on(Orientation::from_dirs(g, dirs), 2);
  CHECK_FALSE(mutated.all_pass());
  bool r6_failed = false;
  for (const auto& c : mutated.clauses)
    if (c.id == "R6") {
      r6_failed = !c.pass;
      CHECK(c.counterexample == "c(1,2) -> a(1,2')");
    }
  CHECK(r6_failed);
  CHECK_THROWS_AS(check_remarks(1), std::invalid_argument);
}
