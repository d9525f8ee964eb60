#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/words.hpp"

namespace testutil {

// Word from single-character letters, e.g. w("abcabc").
inline wordrep::Word w(const std::string& chars,
                       wordrep::WordView view = wordrep::WordView::linear) {
  wordrep::Word out;
  out.view = view;
  for (char c : chars) out.letters.push_back(std::string(1, c));
  return out;
}

// Random labeled graph on n vertices with the given edge probability in
// percent; deterministic per seed.
inline wordrep::Graph random_graph(int n, int edge_pct, std::mt19937& rng) {
  std::vector<std::string> vs;
  for (int i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
  std::vector<std::pair<std::string, std::string>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (static_cast<int>(rng() % 100) < edge_pct) es.emplace_back(vs[i], vs[j]);
  return wordrep::build_graph(vs, es);
}

inline int triangle_count(const wordrep::Graph& g) {
  int n = g.vertex_count(), t = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) ++t;
  return t;
}

}  // namespace testutil
