#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "wordrep/io.hpp"
#include "wordrep/search.hpp"

using namespace wordrep;

TEST_CASE("edge list round trip") {
  Graph g = k4_prime();
  Graph back = parse_edge_list(to_edge_list(g));
  CHECK(back == g);
  CHECK(to_edge_list(back) == to_edge_list(g));
}

TEST_CASE("edge list parsing details") {
  Graph g = parse_edge_list("# header comment\nvertices: a b c\na b # trailing\n\nb c\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK_THROWS_AS(parse_edge_list("a b\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("vertices: a b\na b c\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list(""), std::invalid_argument);
}

TEST_CASE("json round trip") {
  Graph g = mycielski(cycle(3));
  Graph back = graph_from_json(graph_to_json(g));
  CHECK(back == g);
  CHECK(graph_to_json(back).dump() == graph_to_json(g).dump());
  CHECK_THROWS_AS(graph_from_json(nlohmann::json{{"vertices", {"a"}}, {"edges", {{"a"}}}}),
                  std::invalid_argument);
}

TEST_CASE("format sniffing") {
  Graph g = cycle(4);
  CHECK(parse_graph(graph_to_json(g).dump()) == g);
  CHECK(parse_graph(to_edge_list(g)) == g);
}

TEST_CASE("dot export") {
  std::string dot = to_dot(cycle(3));
  CHECK(dot.find("graph G {") == 0);
  CHECK(dot.find("\"1\" -- \"2\";") != std::string::npos);
  Orientation d = Orientation::from_arcs(path(3), {{"1", "2"}, {"3", "2"}});
  std::string ddot = to_dot(d);
  CHECK(ddot.find("digraph D {") == 0);
  CHECK(ddot.find("\"3\" -> \"2\";") != std::string::npos);
  CHECK(orientation_to_text(d) == "1 -> 2\n3 -> 2\n");
}

TEST_CASE("certificate serialization covers both verdicts") {
  Certificate rep = decide_word_representable(cycle(5));
  nlohmann::json jr = certificate_to_json(rep);
  CHECK(jr["verdict"] == "representable");
  CHECK(jr["witness"]["arcs"].size() == 5);

  Certificate non = decide_word_representable(mycielski(cycle(3)));
  nlohmann::json jn = certificate_to_json(non);
  CHECK(jn["verdict"] == "non_representable");
  CHECK(jn["exhaustion"]["branches_explored"].get<std::uint64_t>() > 0);
  CHECK(jn["exhaustion"].contains("symmetry_note"));
}

TEST_CASE("remark report serialization") {
  nlohmann::json j = remark_report_to_json(check_remarks(2));
  CHECK(j["all_pass"] == true);
  CHECK(j["clauses"].contains("R4.i"));
  CHECK(j["clauses"].contains("R6"));
}

TEST_CASE("word parsing") {
  Word w = parse_word("a b c a");
  CHECK(w.size() == 4);
  CHECK(word_to_string(w) == "a b c a");
  CHECK(parse_word("x", WordView::cyclic).view == WordView::cyclic);
}
