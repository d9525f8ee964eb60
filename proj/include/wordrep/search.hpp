#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "orientation.hpp"

namespace wordrep {

struct SearchOptions {
  int workers = 1;
  bool override_guard = false;
};

/// Evidence for a word-representability verdict: a verified semi-transitive
/// orientation, or a deterministic record of the exhausted search.
struct ExhaustionRecord {
  std::uint64_t branches_explored = 0;
  std::string symmetry_note;
  int workers = 1;
};

struct Certificate {
  enum class Verdict { representable, non_representable };
  Verdict verdict = Verdict::representable;
  std::optional<Orientation> witness;
  std::optional<ExhaustionRecord> exhaustion;
};

namespace detail {

// Backtracking search over edge directions on a compact index set (vertices
// incident to at least one edge; at most 64 of them). Prunes a branch as soon
// as the decided arcs contain a directed cycle, or a shortcut configuration
// whose missing pair is a non-edge of the base graph (such a configuration
// survives every completion). At a full assignment those two checks are
// exactly semi-transitivity.
class OrientSearch {
 public:
  using Mask = std::uint64_t;

  struct Result {
    std::vector<std::vector<signed char>> solutions;  // edge states, +1 lo->hi
    std::uint64_t branches = 0;
    bool feasible_root = true;
  };

  OrientSearch(const Graph& g, const std::vector<signed char>& fixed_states)
      : state_(fixed_states) {
    compact_.assign(g.vertex_count(), -1);
    for (auto [u, v] : g.edges()) {
      if (compact_[u] < 0) compact_[u] = n_++;
      if (compact_[v] < 0) compact_[v] = n_++;
    }
    if (n_ > 64)
      throw scale_guard_error("orientation search limited to 64 edge-incident vertices");
    for (auto [u, v] : g.edges()) {
      eu_.push_back(compact_[u]);
      ev_.push_back(compact_[v]);
    }
    adj_.assign(n_, 0);
    for (std::size_t e = 0; e < eu_.size(); ++e) {
      adj_[eu_[e]] |= bit(ev_[e]);
      adj_[ev_[e]] |= bit(eu_[e]);
    }
    out_.assign(n_, 0);
    in_.assign(n_, 0);
    desc_.assign(n_, 0);
    anc_.assign(n_, 0);
  }

  // first_only: stop at the first solution. pin_first_free: fix the first
  // free edge's direction (sound when nothing is decided yet, by reversal
  // symmetry). stop: external abort flag shared between workers.
  Result run(bool first_only, std::size_t limit, bool pin_first_free,
             const std::atomic<bool>* stop) {
    stop_ = stop;
    first_only_ = first_only;
    limit_ = limit;
    res_ = Result{};
    for (std::size_t e = 0; e < state_.size(); ++e) {
      if (state_[e] == 0) continue;
      int t = state_[e] > 0 ? eu_[e] : ev_[e];
      int h = state_[e] > 0 ? ev_[e] : eu_[e];
      if (desc_[h] & bit(t)) {  // committing this arc closes a directed cycle
        res_.feasible_root = false;
        res_.branches = 1;
        return res_;
      }
      commit(t, h);
      if (forced_shortcut()) {
        res_.feasible_root = false;
        res_.branches = 1;
        return res_;
      }
    }
    if (pin_first_free) {
      for (std::size_t e = 0; e < state_.size(); ++e)
        if (state_[e] == 0) {
          pinned_edge_ = static_cast<int>(e);
          break;
        }
    }
    dfs();
    return res_;
  }

  int pinned_edge() const { return pinned_edge_; }

 private:
  static Mask bit(int v) { return Mask(1) << v; }

  void commit(int t, int h) {
    out_[t] |= bit(h);
    in_[h] |= bit(t);
    recompute_reach();
  }

  void uncommit(int t, int h) {
    out_[t] &= ~bit(h);
    in_[h] &= ~bit(t);
    recompute_reach();
  }

  void recompute_reach() {
    // relaxation to fixpoint; cheap at this scale and always acyclic here
    for (int v = 0; v < n_; ++v) desc_[v] = out_[v];
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < n_; ++v) {
        Mask acc = desc_[v];
        Mask m = desc_[v];
        while (m) {
          int w = std::countr_zero(m);
          m &= m - 1;
          acc |= desc_[w];
        }
        if (acc != desc_[v]) {
          desc_[v] = acc;
          changed = true;
        }
      }
    }
    for (int v = 0; v < n_; ++v) anc_[v] = 0;
    for (int v = 0; v < n_; ++v) {
      Mask m = desc_[v];
      while (m) {
        int w = std::countr_zero(m);
        m &= m - 1;
        anc_[w] |= bit(v);
      }
    }
  }

  // A decided directed path between non-adjacent vertices of some decided
  // arc's between-set dooms every completion.
  bool forced_shortcut() const {
    for (std::size_t e = 0; e < state_.size(); ++e) {
      if (state_[e] == 0) continue;
      int t = state_[e] > 0 ? eu_[e] : ev_[e];
      int h = state_[e] > 0 ? ev_[e] : eu_[e];
      Mask between = (desc_[t] | bit(t)) & (anc_[h] | bit(h));
      Mask m = between;
      while (m) {
        int x = std::countr_zero(m);
        m &= m - 1;
        if (desc_[x] & between & ~adj_[x] & ~bit(x)) return true;
      }
    }
    return false;
  }

  void dfs() {
    if (stop_ && stop_->load(std::memory_order_relaxed)) return;
    if (done_) return;

    int best = -1, best_legal = 3;
    signed char best_dir = 0;
    for (std::size_t e = 0; e < state_.size(); ++e) {
      if (state_[e] != 0) continue;
      int u = eu_[e], v = ev_[e];
      bool fwd_ok = !(desc_[v] & bit(u));  // u->v closes a cycle iff v reaches u
      bool bwd_ok = !(desc_[u] & bit(v));
      if (static_cast<int>(e) == pinned_edge_) bwd_ok = false;
      int legal = int(fwd_ok) + int(bwd_ok);
      if (legal < best_legal) {
        best_legal = legal;
        best = static_cast<int>(e);
        best_dir = fwd_ok ? 1 : -1;
        if (legal == 0) break;
      }
    }

    if (best < 0) {  // complete assignment; checks held along the way
      res_.solutions.push_back(state_);
      ++res_.branches;
      if (first_only_ || res_.solutions.size() >= limit_) done_ = true;
      return;
    }
    if (best_legal == 0) {
      ++res_.branches;
      return;
    }

    auto try_dir = [&](signed char dir) {
      if (done_) return;
      state_[best] = dir;
      int t = dir > 0 ? eu_[best] : ev_[best];
      int h = dir > 0 ? ev_[best] : eu_[best];
      commit(t, h);
      if (forced_shortcut()) ++res_.branches;
      else dfs();
      uncommit(t, h);
      state_[best] = 0;
    };

    if (best_legal == 1) {
      try_dir(best_dir);
    } else {
      try_dir(1);
      try_dir(-1);
    }
  }

  std::vector<signed char> state_;
  std::vector<int> compact_;
  std::vector<int> eu_, ev_;
  std::vector<Mask> adj_, out_, in_, desc_, anc_;
  int n_ = 0;
  int pinned_edge_ = -1;
  bool first_only_ = false;
  bool done_ = false;
  std::size_t limit_ = 1;
  Result res_;
  const std::atomic<bool>* stop_ = nullptr;
};

struct SearchOutcome {
  std::optional<Orientation> found;
  std::uint64_t branches = 0;
  std::string symmetry_note;
  int workers = 1;
};

inline Orientation orientation_from_states(const Graph& g,
                                           const std::vector<signed char>& states) {
  std::vector<ArcDir> dirs;
  dirs.reserve(states.size());
  for (signed char s : states) dirs.push_back(s > 0 ? ArcDir::forward : ArcDir::backward);
  return Orientation::from_dirs(g, std::move(dirs));
}

inline SearchOutcome run_semi_transitive_search(const Graph& g,
                                                std::vector<signed char> fixed,
                                                const SearchOptions& opts) {
  SearchOutcome out;
  out.workers = std::max(1, opts.workers);
  bool nothing_fixed =
      std::all_of(fixed.begin(), fixed.end(), [](signed char s) { return s == 0; });
  out.symmetry_note = nothing_fixed && !fixed.empty()
                          ? "first edge pinned to its canonical direction; reversing every arc "
                            "of a semi-transitive orientation is semi-transitive"
                          : "no pinning (fixed arcs supplied)";

  if (out.workers == 1) {
    OrientSearch s(g, fixed);
    auto r = s.run(true, 1, nothing_fixed, nullptr);
    out.branches = r.branches;
    if (!r.solutions.empty()) out.found = orientation_from_states(g, r.solutions.front());
    return out;
  }

  // Split the tree across workers on the first few free edges (after the
  // pinned one). Exhaustion counts are summed per combo, so the total for a
  // non-representable input does not depend on thread scheduling.
  std::vector<int> split_edges;
  int pinned = -1;
  if (nothing_fixed) {
    for (std::size_t e = 0; e < fixed.size() && pinned < 0; ++e)
      if (fixed[e] == 0) pinned = static_cast<int>(e);
    if (pinned >= 0) fixed[pinned] = 1;
  }
  int want = 0;
  while ((1 << want) < out.workers && want < 4) ++want;
  for (std::size_t e = 0; e < fixed.size() && static_cast<int>(split_edges.size()) < want; ++e)
    if (fixed[e] == 0) split_edges.push_back(static_cast<int>(e));

  int combos = 1 << split_edges.size();
  std::vector<std::uint64_t> combo_branches(combos, 0);
  std::vector<std::optional<std::vector<signed char>>> combo_solution(combos);
  std::atomic<bool> stop{false};
  std::atomic<int> next{0};

  auto worker = [&]() {
    for (;;) {
      int c = next.fetch_add(1);
      if (c >= combos) return;
      auto states = fixed;
      for (std::size_t i = 0; i < split_edges.size(); ++i)
        states[split_edges[i]] = (c >> i) & 1 ? 1 : -1;
      OrientSearch s(g, states);
      auto r = s.run(true, 1, false, &stop);
      combo_branches[c] = r.branches;
      if (!r.solutions.empty()) {
        combo_solution[c] = r.solutions.front();
        stop.store(true, std::memory_order_relaxed);
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < out.workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  for (int c = 0; c < combos; ++c) out.branches += combo_branches[c];
  for (int c = 0; c < combos; ++c)
    if (combo_solution[c]) {
      out.found = orientation_from_states(g, *combo_solution[c]);
      break;
    }
  return out;
}

}  // namespace detail

/// A semi-transitive orientation of g extending `fixed`, or none after an
/// exhaustive backtracking search. Edges are decided most-constrained-first
/// (fewest cycle-legal directions, ties by canonical edge order); with no
/// fixed arcs the first edge is pinned by reversal symmetry. Guarded to 24
/// free edges unless overridden.
inline std::optional<Orientation> find_semi_transitive(
    const Graph& g, const std::optional<PartialOrientation>& fixed = std::nullopt,
    const SearchOptions& opts = {}) {
  std::vector<signed char> states(g.edge_count(), 0);
  if (fixed) {
    if (fixed->base() != g)
      throw std::invalid_argument("fixed partial orientation is over a different graph");
    states = fixed->states();
  }
  int free_edges = static_cast<int>(std::count(states.begin(), states.end(), 0));
  if (!opts.override_guard && free_edges > 24)
    throw scale_guard_error("find_semi_transitive limited to 24 free edges");
  auto outcome = detail::run_semi_transitive_search(g, std::move(states), opts);
  if (!outcome.found) return std::nullopt;
  if (!is_semi_transitive(*outcome.found))
    throw std::logic_error("search returned an orientation that fails verification");
  return outcome.found;
}

/// Decides word-representability through the semi-transitive-orientation
/// characterization: a verified witness orientation, or an exhaustion record.
inline Certificate decide_word_representable(const Graph& g, const SearchOptions& opts = {}) {
  std::vector<signed char> states(g.edge_count(), 0);
  if (!opts.override_guard && g.edge_count() > 24)
    throw scale_guard_error("decide_word_representable limited to 24 edges");
  auto outcome = detail::run_semi_transitive_search(g, std::move(states), opts);
  Certificate cert;
  if (outcome.found) {
    if (!is_semi_transitive(*outcome.found))
      throw std::logic_error("search returned an orientation that fails verification");
    cert.verdict = Certificate::Verdict::representable;
    cert.witness = std::move(outcome.found);
  } else {
    cert.verdict = Certificate::Verdict::non_representable;
    cert.exhaustion =
        ExhaustionRecord{outcome.branches, outcome.symmetry_note, outcome.workers};
  }
  return cert;
}

/// All (up to limit) total semi-transitive extensions of p, in deterministic
/// depth-first order. No symmetry pinning: the given arcs are honored as-is.
inline std::vector<Orientation> enumerate_completions(const PartialOrientation& p,
                                                      std::size_t limit,
                                                      bool override_guard = false) {
  if (!override_guard && p.free_count() > 20)
    throw scale_guard_error("enumerate_completions limited to 20 free edges");
  detail::OrientSearch s(p.base(), p.states());
  auto r = s.run(false, limit == 0 ? SIZE_MAX : limit, false, nullptr);
  std::vector<Orientation> out;
  for (const auto& states : r.solutions) {
    Orientation d = detail::orientation_from_states(p.base(), states);
    if (!is_semi_transitive(d))
      throw std::logic_error("enumeration produced an orientation that fails verification");
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace wordrep
