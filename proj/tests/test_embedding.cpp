#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "wordrep/embedding.hpp"
#include "wordrep/graph.hpp"

using namespace wordrep;

TEST_CASE("subgraph vs induced mode") {
  // P3 sits inside K3 as a subgraph but not as an induced subgraph
  CHECK(find_embedding(path(3), complete(3), EmbedMode::subgraph).has_value());
  CHECK_FALSE(find_embedding(path(3), complete(3), EmbedMode::induced).has_value());
}

TEST_CASE("embedding examples") {
  CHECK(find_embedding(k4_prime(), complete(5), EmbedMode::subgraph).has_value());
  CHECK_FALSE(find_embedding(complete(4), cycle(5), EmbedMode::subgraph).has_value());
  CHECK_FALSE(find_embedding(complete(4), path(3), EmbedMode::subgraph).has_value());
}

TEST_CASE("returned embeddings satisfy their mode") {
  auto e = find_embedding(w5_prime(), graph_a(), EmbedMode::subgraph);
  REQUIRE(e.has_value());
  CHECK(embedding_valid(w5_prime(), graph_a(), *e));
  auto li = find_embedding(line_graph(path(4)), line_graph(cycle(5)), EmbedMode::induced);
  REQUIRE(li.has_value());
  CHECK(embedding_valid(line_graph(path(4)), line_graph(cycle(5)), *li));
}

TEST_CASE("subgraph relation transfers to induced line graphs") {
  std::mt19937 rng(23);
  int checked = 0;
  for (int t = 0; t < 40 && checked < 10; ++t) {
    Graph g = testutil::random_graph(3 + static_cast<int>(rng() % 4), 60, rng);
    Graph h = testutil::random_graph(3, 60, rng);
    if (g.edge_count() == 0 || h.edge_count() == 0) continue;
    if (!find_embedding(h, g, EmbedMode::subgraph)) continue;
    ++checked;
    CHECK(find_embedding(line_graph(h), line_graph(g), EmbedMode::induced).has_value());
  }
  CHECK(checked >= 5);
}

TEST_CASE("are_isomorphic") {
  Graph c5 = cycle(5);
  Graph relabeled_c5 = build_graph({"p", "q", "r", "s", "t"},
                                   {{"p", "q"}, {"q", "r"}, {"r", "s"}, {"s", "t"}, {"p", "t"}});
  CHECK(are_isomorphic(c5, relabeled_c5));
  CHECK_FALSE(are_isomorphic(cycle(6), complete_bipartite(3, 3)));
  CHECK(are_isomorphic(line_graph(cycle(7)), cycle(7)));
  CHECK_FALSE(are_isomorphic(path(4), cycle(4)));
}
