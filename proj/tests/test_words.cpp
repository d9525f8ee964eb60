#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "helpers.hpp"
#include "wordrep/words.hpp"

using namespace wordrep;
using testutil::w;

TEST_CASE("restriction") {
  CHECK(restrict_to(w("abdcbadac"), {"a", "b", "c"}) == w("abcbaac"));
  CHECK(restrict_to(w("abc"), {}) == w(""));
  CHECK(restrict_to(w("abc"), {"a", "b", "c"}) == w("abc"));
  Word cyc = w("abc", WordView::cyclic);
  CHECK(restrict_to(cyc, {"a"}).view == WordView::cyclic);
}

TEST_CASE("alternation") {
  CHECK(alternates(w("abab"), "a", "b"));
  CHECK_FALSE(alternates(w("abba"), "a", "b"));
  CHECK_FALSE(alternates(w("abcbaac"), "a", "c"));  // restriction acaac doubles a
  CHECK(alternates(w("b"), "a", "b"));
  CHECK(alternates(w(""), "a", "b"));
  CHECK_THROWS_AS(alternates(w("ab", WordView::cyclic), "a", "b"), std::invalid_argument);
}

TEST_CASE("represented graphs") {
  Graph k3 = represented_graph(w("abcabc"), {"a", "b", "c"});
  CHECK(k3.edge_count() == 3);  // all pairs alternate
  CHECK(represented_graph(w("aabbcc"), {"a", "b", "c"}).edge_count() == 0);
  Graph g = represented_graph(w("ababc"), {"a", "b", "c"});
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge("a", "b"));
  CHECK_THROWS_AS(represented_graph(w("ab"), {"a", "b", "c"}), std::invalid_argument);
}

TEST_CASE("represents") {
  Graph k2 = build_graph({"a", "b"}, {{"a", "b"}});
  CHECK(represents(w("ab"), k2));
  CHECK(represents(w("abab"), k2));
  CHECK_FALSE(represents(w("abba"), k2));
}

TEST_CASE("uniformity") {
  CHECK(uniformity(w("abcabc")) == 2);
  CHECK_FALSE(uniformity(w("aab")).has_value());
  CHECK(uniformity(w("ab")) == 1);
  CHECK_FALSE(uniformity(w("")).has_value());
}

TEST_CASE("cyclic shift and reversal") {
  CHECK(cyclic_shift(w("abcd"), 1) == w("bcda"));
  CHECK(cyclic_shift(w("abcd"), 0) == w("abcd"));
  CHECK(cyclic_shift(w("abcd"), 4) == w("abcd"));
  CHECK(cyclic_shift(w("abcd"), -1) == w("dabc"));
  CHECK(reversed_word(w("abc")) == w("cba"));
}

TEST_CASE("statement evaluation") {
  using K = Statement::Kind;
  Word u = w("abcabc", WordView::cyclic);
  CHECK(eval_statement(u, Statement(K::forall, "a", "b", "c")));
  CHECK_FALSE(eval_statement(u, Statement(K::exists, "a", "c", "b")));

  Word v = w("abccba", WordView::cyclic);
  CHECK(eval_statement(v, Statement(K::exists, "a", "b", "c")));
  CHECK_FALSE(eval_statement(v, Statement(K::forall, "a", "b", "c")));

  CHECK_THROWS_AS(eval_statement(w("abc", WordView::cyclic), Statement(K::exists, "a", "b", "c")),
                  std::invalid_argument);  // pivot occurs once
  CHECK_THROWS_AS(eval_statement(w("abcabc"), Statement(K::exists, "a", "b", "c")),
                  std::invalid_argument);  // linear view rejected
  CHECK_THROWS_AS(Statement(K::exists, "a", "a", "c"), std::invalid_argument);
}

TEST_CASE("find_uniform_word") {
  auto k3 = find_uniform_word(complete(3), 1);
  REQUIRE(k3.has_value());
  CHECK(uniformity(*k3) == 1);
  CHECK(represents(*k3, complete(3)));

  auto c4 = find_uniform_word(cycle(4), 2);
  REQUIRE(c4.has_value());
  CHECK(uniformity(*c4) == 2);
  CHECK(represents(*c4, cycle(4)));

  Graph empty2 = build_graph({"a", "b"}, {});
  CHECK_FALSE(find_uniform_word(empty2, 1).has_value());
  auto e2 = find_uniform_word(empty2, 2);
  REQUIRE(e2.has_value());
  CHECK(uniformity(*e2) == 2);

  CHECK_THROWS_AS(find_uniform_word(complete(9), 2), scale_guard_error);
  CHECK_THROWS_AS(find_uniform_word(complete(3), 4), scale_guard_error);
  // the override lifts the k guard; the clique is found at k = 1 immediately
  CHECK(find_uniform_word(complete(3), 4, true).has_value());
}

TEST_CASE("smallest k wins") {
  auto word = find_uniform_word(complete(4), 3);
  REQUIRE(word.has_value());
  CHECK(uniformity(*word) == 1);
}

TEST_CASE("reversal invariance on random represented graphs") {
  std::mt19937 rng(99);
  for (int t = 0; t < 50; ++t) {
    int s = 2 + static_cast<int>(rng() % 5);
    std::vector<std::string> alpha;
    for (int i = 0; i < s; ++i) alpha.push_back(std::string(1, char('a' + i)));
    Word word;
    for (const auto& x : alpha) word.letters.push_back(x);
    int extra = static_cast<int>(rng() % 8);
    for (int e = 0; e < extra; ++e) word.letters.push_back(alpha[rng() % alpha.size()]);
    for (std::size_t i = word.letters.size(); i > 1; --i)
      std::swap(word.letters[i - 1], word.letters[rng() % i]);
    Graph g = represented_graph(word, alpha);
    CHECK(represents(reversed_word(word), g));
  }
}

TEST_CASE("cyclic shift invariance for uniform words") {
  std::mt19937 rng(123);
  for (int t = 0; t < 30; ++t) {
    int s = 2 + static_cast<int>(rng() % 5);
    int k = 1 + static_cast<int>(rng() % 3);
    std::vector<std::string> alpha;
    for (int i = 0; i < s; ++i) alpha.push_back(std::string(1, char('a' + i)));
    Word word;
    for (const auto& x : alpha)
      for (int c = 0; c < k; ++c) word.letters.push_back(x);
    for (std::size_t i = word.letters.size(); i > 1; --i)
      std::swap(word.letters[i - 1], word.letters[rng() % i]);
    REQUIRE(uniformity(word) == k);
    Graph g = represented_graph(word, alpha);
    for (int j = 0; j < static_cast<int>(word.size()); ++j)
      CHECK(represents(cyclic_shift(word, j), g));
  }
}
