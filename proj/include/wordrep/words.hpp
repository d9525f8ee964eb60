#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace wordrep {

enum class WordView { linear, cyclic };

/// A word over vertex labels. The view is an explicit field, never inferred:
/// alternation and representation read the word linearly, statement
/// evaluation reads it as written on a circle.
struct Word {
  std::vector<std::string> letters;
  WordView view = WordView::linear;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  Word with_view(WordView v) const { return Word{letters, v}; }

  std::vector<std::string> alphabet() const {
    std::vector<std::string> a(letters);
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
  }

  int occurrences(const std::string& x) const {
    return static_cast<int>(std::count(letters.begin(), letters.end(), x));
  }

  friend bool operator==(const Word&, const Word&) = default;
};

/// Subsequence of w keeping only letters in s; preserves the view.
inline Word restrict_to(const Word& w, const std::set<std::string>& s) {
  Word out;
  out.view = w.view;
  for (const auto& x : w.letters)
    if (s.count(x)) out.letters.push_back(x);
  return out;
}

/// True iff the restriction of w to {a, b} strictly alternates (no two
/// consecutive equal letters); words of length 0 or 1 alternate.
inline bool alternates(const Word& w, const std::string& a, const std::string& b) {
  if (w.view != WordView::linear)
    throw std::invalid_argument("alternates is defined on the linear view");
  const std::string* prev = nullptr;
  for (const auto& x : w.letters) {
    if (x != a && x != b) continue;
    if (prev && *prev == x) return false;
    prev = &x;
  }
  return true;
}

/// Graph on the given vertices with an edge exactly where the two letters
/// alternate in w. Every vertex must occur in w.
inline Graph represented_graph(const Word& w, const std::vector<std::string>& vertices) {
  if (w.view != WordView::linear)
    throw std::invalid_argument("represented_graph is defined on the linear view");
  for (const auto& v : vertices)
    if (w.occurrences(v) == 0) throw std::invalid_argument("vertex absent from word: " + v);
  std::vector<std::pair<std::string, std::string>> es;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (alternates(w, vertices[i], vertices[j])) es.emplace_back(vertices[i], vertices[j]);
  return build_graph(vertices, es);
}

inline bool represents(const Word& w, const Graph& g) {
  return represented_graph(w, g.labels()) == g;
}

/// k if every letter occurs exactly k times, otherwise none. The empty word
/// has no witnessing letters and yields none.
inline std::optional<int> uniformity(const Word& w) {
  if (w.empty()) return std::nullopt;
  std::unordered_map<std::string, int> cnt;
  for (const auto& x : w.letters) ++cnt[x];
  int k = cnt.begin()->second;
  for (const auto& [_, c] : cnt)
    if (c != k) return std::nullopt;
  return k;
}

inline Word cyclic_shift(const Word& w, int k) {
  if (w.empty()) return w;
  int n = static_cast<int>(w.size());
  int s = ((k % n) + n) % n;
  Word out;
  out.view = w.view;
  out.letters.reserve(w.size());
  for (int i = 0; i < n; ++i) out.letters.push_back(w.letters[(i + s) % n]);
  return out;
}

inline Word reversed_word(const Word& w) {
  Word out = w;
  std::reverse(out.letters.begin(), out.letters.end());
  return out;
}

/// Cyclic statement about a pivot and two flanking letters.
///   exists: some cyclic gap between consecutive pivot occurrences contains
///           an occurrence of `left` strictly before an occurrence of `right`.
///   forall: every cyclic gap does.
/// A gap excludes its bounding pivot occurrences.
struct Statement {
  enum class Kind { exists, forall };
  Kind kind = Kind::exists;
  std::string pivot, left, right;

  Statement(Kind k, std::string a, std::string b, std::string c)
      : kind(k), pivot(std::move(a)), left(std::move(b)), right(std::move(c)) {
    if (pivot == left || pivot == right || left == right)
      throw std::invalid_argument("statement letters must be pairwise distinct");
  }
};

inline bool eval_statement(const Word& w, const Statement& s) {
  if (w.view != WordView::cyclic)
    throw std::invalid_argument("eval_statement is defined on the cyclic view");
  std::vector<int> piv;
  int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i)
    if (w.letters[i] == s.pivot) piv.push_back(i);
  if (piv.size() < 2)
    throw std::invalid_argument("pivot must occur at least twice: " + s.pivot);
  int satisfied = 0;
  for (std::size_t g = 0; g < piv.size(); ++g) {
    int from = piv[g];
    int to = piv[(g + 1) % piv.size()];
    int len = (to - from + n) % n;  // gap wraps when g is the last occurrence
    bool seen_left = false, ok = false;
    for (int d = 1; d < len; ++d) {
      const std::string& x = w.letters[(from + d) % n];
      if (x == s.left) seen_left = true;
      else if (x == s.right && seen_left) { ok = true; break; }
    }
    if (ok) ++satisfied;
  }
  return s.kind == Statement::Kind::exists ? satisfied > 0
                                           : satisfied == static_cast<int>(piv.size());
}

namespace detail {

struct UniformWordSearch {
  const Graph& g;
  int n, k;
  std::vector<int> word;                  // vertex index per position
  std::vector<int> count;
  std::vector<std::vector<int>> last;     // last of the pair seen so far, -1 none
  std::vector<std::vector<char>> broken;  // restriction to the pair already non-alternating

  UniformWordSearch(const Graph& graph, int uniform_k)
      : g(graph), n(graph.vertex_count()), k(uniform_k) {
    count.assign(n, 0);
    last.assign(n, std::vector<int>(n, -1));
    broken.assign(n, std::vector<char>(n, 0));
  }

  // Places x at the next position. Always applies the full state update
  // (unplace undoes it exactly); the return value says whether the prefix is
  // still extendable: false once an edge pair carries a double letter, or a
  // non-edge pair is exhausted while still alternating.
  bool place(int x, std::vector<std::pair<int, int>>& undo_last,
             std::vector<int>& undo_broken) {
    bool ok = true;
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;
      int& l = last[std::min(x, y)][std::max(x, y)];
      if (l == x) {
        if (g.has_edge(x, y)) {
          ok = false;
        } else {
          char& br = broken[std::min(x, y)][std::max(x, y)];
          if (!br) { br = 1; undo_broken.push_back(y); }
        }
      }
      undo_last.emplace_back(y, l);
      l = x;
    }
    ++count[x];
    word.push_back(x);
    if (ok && count[x] == k) {
      for (int y = 0; y < n; ++y)
        if (y != x && !g.has_edge(x, y) && count[y] == k &&
            !broken[std::min(x, y)][std::max(x, y)]) {
          ok = false;
          break;
        }
    }
    return ok;
  }

  void unplace(int x, const std::vector<std::pair<int, int>>& undo_last,
               const std::vector<int>& undo_broken) {
    word.pop_back();
    --count[x];
    for (int y : undo_broken) broken[std::min(x, y)][std::max(x, y)] = 0;
    for (auto it = undo_last.rbegin(); it != undo_last.rend(); ++it)
      last[std::min(x, it->first)][std::max(x, it->first)] = it->second;
  }

  bool dfs() {
    if (static_cast<int>(word.size()) == n * k) return true;
    for (int x = 0; x < n; ++x) {
      if (count[x] == k) continue;
      std::vector<std::pair<int, int>> undo_last;
      std::vector<int> undo_broken;
      bool placed = place(x, undo_last, undo_broken);
      if (placed && dfs()) return true;
      unplace(x, undo_last, undo_broken);
    }
    return false;
  }
};

}  // namespace detail

/// Exhaustive search for a k-uniform representing word with the smallest
/// k <= k_max. The first letter is fixed to the first vertex: cyclic shifts
/// of a uniform representing word also represent, so this loses nothing.
/// Guarded to |V| <= 8 and k_max <= 3 unless overridden.
inline std::optional<Word> find_uniform_word(const Graph& g, int k_max,
                                             bool override_guard = false) {
  if (g.vertex_count() == 0) throw std::invalid_argument("find_uniform_word: empty graph");
  if (!override_guard && (g.vertex_count() > 8 || k_max > 3))
    throw scale_guard_error("find_uniform_word limited to 8 vertices and k <= 3");
  for (int k = 1; k <= k_max; ++k) {
    detail::UniformWordSearch s(g, k);
    std::vector<std::pair<int, int>> undo_last;
    std::vector<int> undo_broken;
    if (!s.place(0, undo_last, undo_broken)) continue;
    if (!s.dfs()) continue;
    Word w;
    for (int x : s.word) w.letters.push_back(g.label(x));
    if (!represents(w, g))
      throw std::logic_error("find_uniform_word produced a non-representing word");
    return w;
  }
  return std::nullopt;
}

}  // namespace wordrep
