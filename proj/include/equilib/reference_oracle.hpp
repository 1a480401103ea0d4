#pragma once

// Brute-force checkers that translate each equilibrium definition literally:
// subsets come from bitmasks, joint strategies from recursive assignment, and
// nothing exits early. They exist to cross-check the optimized scans in
// equilibria.hpp and are only practical for small games.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <utility>
#include <vector>

#include "equilibria.hpp"
#include "game.hpp"

namespace equilib::reference {

namespace detail {

inline std::vector<int> mask_members(unsigned mask, int n) {
  std::vector<int> members;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) members.push_back(i);
  return members;
}

// Visit every joint assignment of the listed players, mutating `work` in
// place; positions outside `members` are left alone.
template <typename Fn>
void for_each_assignment(const GameSpec& spec, const std::vector<int>& members, PureProfile& work,
                         std::size_t depth, Fn&& fn) {
  if (depth == members.size()) {
    fn(std::as_const(work));
    return;
  }
  const int player = members[depth];
  const int saved = work[player];
  for (int action = 0; action < spec.num_actions(player); ++action) {
    work[player] = action;
    for_each_assignment(spec, members, work, depth + 1, fn);
  }
  work[player] = saved;
}

inline Payoff group_utility(const UtilityOracle& game, const PureProfile& profile,
                            const std::vector<int>& members) {
  Payoff sum = 0;
  for (int member : members) sum += game.utility(profile, member);
  return sum;
}

}  // namespace detail

inline bool is_k_resilient(const UtilityOracle& game, const PureProfile& profile, int k) {
  const GameSpec& spec = game.spec();
  const int n = spec.num_players();
  bool holds = true;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) > k) continue;
    const std::vector<int> members = detail::mask_members(mask, n);
    PureProfile work = profile;
    detail::for_each_assignment(spec, members, work, 0, [&](const PureProfile& deviated) {
      for (int member : members)
        holds = holds && game.utility(profile, member) >= game.utility(deviated, member);
    });
  }
  return holds;
}

inline bool is_l_repellent(const UtilityOracle& game, const PureProfile& profile, int l) {
  const GameSpec& spec = game.spec();
  const int n = spec.num_players();
  bool holds = true;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) > l) continue;
    const std::vector<int> members = detail::mask_members(mask, n);
    PureProfile work = profile;
    detail::for_each_assignment(spec, members, work, 0, [&](const PureProfile& deviated) {
      holds = holds && detail::group_utility(game, profile, members) >=
                           detail::group_utility(game, deviated, members);
    });
  }
  return holds;
}

inline bool is_t_immune(const UtilityOracle& game, const PureProfile& profile, int t) {
  const GameSpec& spec = game.spec();
  const int n = spec.num_players();
  bool holds = true;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) > t) continue;
    const std::vector<int> byzantine = detail::mask_members(mask, n);
    PureProfile work = profile;
    detail::for_each_assignment(spec, byzantine, work, 0, [&](const PureProfile& disturbed) {
      for (int player = 0; player < n; ++player) {
        if (mask & (1u << player)) continue;
        holds = holds && game.utility(disturbed, player) >= game.utility(profile, player);
      }
    });
  }
  return holds;
}

inline bool is_kt_robust(const UtilityOracle& game, const PureProfile& profile, int k, int t) {
  const GameSpec& spec = game.spec();
  const int n = spec.num_players();
  bool holds = true;
  for (unsigned cmask = 0; cmask < (1u << n); ++cmask) {
    if (std::popcount(cmask) > k) continue;
    const std::vector<int> members = detail::mask_members(cmask, n);
    for (unsigned tmask = 0; tmask < (1u << n); ++tmask) {
      if (std::popcount(tmask) > t || (cmask & tmask) != 0) continue;
      const std::vector<int> byzantine = detail::mask_members(tmask, n);
      PureProfile outer = profile;
      detail::for_each_assignment(spec, byzantine, outer, 0, [&](const PureProfile& disturbed) {
        PureProfile inner = disturbed;
        detail::for_each_assignment(spec, members, inner, 0, [&](const PureProfile& deviated) {
          for (int member : members)
            holds = holds && game.utility(disturbed, member) >= game.utility(deviated, member);
        });
      });
    }
  }
  return holds;
}

inline bool is_lt_resistant(const UtilityOracle& game, const PureProfile& profile, int l, int t) {
  const GameSpec& spec = game.spec();
  const int n = spec.num_players();
  bool holds = true;
  for (unsigned cmask = 0; cmask < (1u << n); ++cmask) {
    if (std::popcount(cmask) > l) continue;
    const std::vector<int> members = detail::mask_members(cmask, n);
    for (unsigned tmask = 0; tmask < (1u << n); ++tmask) {
      if (std::popcount(tmask) > t || (cmask & tmask) != 0) continue;
      const std::vector<int> byzantine = detail::mask_members(tmask, n);
      PureProfile outer = profile;
      detail::for_each_assignment(spec, byzantine, outer, 0, [&](const PureProfile& disturbed) {
        PureProfile inner = disturbed;
        detail::for_each_assignment(spec, members, inner, 0, [&](const PureProfile& deviated) {
          holds = holds && detail::group_utility(game, disturbed, members) >=
                               detail::group_utility(game, deviated, members);
        });
      });
    }
  }
  return holds;
}

namespace detail {

inline bool weakly_dominant(const UtilityOracle& game, const PureProfile& profile,
                            const std::vector<int>& members, const std::vector<int>& outsiders) {
  const GameSpec& spec = game.spec();
  bool holds = true;
  PureProfile outer = profile;
  for_each_assignment(spec, outsiders, outer, 0, [&](const PureProfile& surrounding) {
    PureProfile inner = surrounding;
    for_each_assignment(spec, members, inner, 0, [&](const PureProfile& deviated) {
      holds = holds && group_utility(game, surrounding, members) >=
                           group_utility(game, deviated, members);
    });
  });
  return holds;
}

// All partitions of {0..n-1}, via restricted growth: element i joins an
// existing block or opens a new one.
template <typename Fn>
void for_each_partition(int n, std::vector<std::vector<int>>& blocks, int element, Fn&& fn) {
  if (element == n) {
    fn(std::as_const(blocks));
    return;
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b].push_back(element);
    for_each_partition(n, blocks, element + 1, fn);
    blocks[b].pop_back();
  }
  blocks.push_back({element});
  for_each_partition(n, blocks, element + 1, fn);
  blocks.pop_back();
}

}  // namespace detail

// Every-coalition formulation: s_C weakly dominant for each C with |C| <= m.
inline bool is_m_stable(const UtilityOracle& game, const PureProfile& profile, int m) {
  const GameSpec& spec = game.spec();
  const int n = spec.num_players();
  bool holds = true;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (std::popcount(mask) > m) continue;
    const std::vector<int> members = detail::mask_members(mask, n);
    const std::vector<int> outsiders = detail::mask_members(~mask & ((1u << n) - 1), n);
    holds = holds && detail::weakly_dominant(game, profile, members, outsiders);
  }
  return holds;
}

// Literal partition formulation: every disjoint cover of N by coalitions of
// size 1..m must consist of weakly dominant blocks. Equivalent to
// is_m_stable; kept separate so the equivalence itself is testable.
inline bool is_m_stable_by_partitions(const UtilityOracle& game, const PureProfile& profile,
                                      int m) {
  const GameSpec& spec = game.spec();
  const int n = spec.num_players();
  bool holds = true;
  std::vector<std::vector<int>> blocks;
  detail::for_each_partition(n, blocks, 0, [&](const std::vector<std::vector<int>>& partition) {
    for (const auto& block : partition)
      if (static_cast<int>(block.size()) > m) return;
    for (const auto& block : partition) {
      std::vector<int> outsiders;
      for (int i = 0; i < n; ++i)
        if (std::find(block.begin(), block.end(), i) == block.end()) outsiders.push_back(i);
      holds = holds && detail::weakly_dominant(game, profile, block, outsiders);
    }
  });
  return holds;
}

// max{v : predicate(v)} without assuming monotonicity; the agreement tests
// against the early-exit scans would expose a non-monotone predicate.
inline int max_resiliency(const UtilityOracle& game, const PureProfile& profile) {
  int best = 0;
  for (int v = 0; v <= game.spec().num_players(); ++v)
    if (is_k_resilient(game, profile, v)) best = v;
  return best;
}

inline int max_repellence(const UtilityOracle& game, const PureProfile& profile) {
  int best = 0;
  for (int v = 0; v <= game.spec().num_players(); ++v)
    if (is_l_repellent(game, profile, v)) best = v;
  return best;
}

inline int max_immunity(const UtilityOracle& game, const PureProfile& profile) {
  int best = 0;
  for (int v = 0; v <= game.spec().num_players(); ++v)
    if (is_t_immune(game, profile, v)) best = v;
  return best;
}

inline int max_stability(const UtilityOracle& game, const PureProfile& profile) {
  int best = 0;
  for (int v = 0; v <= game.spec().num_players(); ++v)
    if (is_m_stable(game, profile, v)) best = v;
  return best;
}

inline Frontier robustness_frontier(const UtilityOracle& game, const PureProfile& profile) {
  const int n = game.spec().num_players();
  Frontier frontier;
  for (int k = 1; k <= n - 1; ++k) {
    int max_t = 0;
    for (int t = 1; t <= n - k; ++t)
      if (is_kt_robust(game, profile, k, t)) max_t = t;
    if (max_t == 0) break;
    frontier.push_back({k, max_t});
  }
  return frontier;
}

inline Frontier resistance_frontier(const UtilityOracle& game, const PureProfile& profile) {
  const int n = game.spec().num_players();
  Frontier frontier;
  for (int k = 1; k <= n - 1; ++k) {
    int max_t = 0;
    for (int t = 1; t <= n - k; ++t)
      if (is_lt_resistant(game, profile, k, t)) max_t = t;
    if (max_t == 0) break;
    frontier.push_back({k, max_t});
  }
  return frontier;
}

}  // namespace equilib::reference
