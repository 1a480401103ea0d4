#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "game.hpp"

namespace equilib {

enum class Check {
  resiliency,
  repellence,
  immunity,
  robustness,
  resistance,
  stability,
  nash,
};

inline constexpr std::string_view check_name(Check check) {
  switch (check) {
    case Check::resiliency: return "resiliency";
    case Check::repellence: return "repellence";
    case Check::immunity: return "immunity";
    case Check::robustness: return "robustness";
    case Check::resistance: return "resistance";
    case Check::stability: return "stability";
    case Check::nash: return "nash";
  }
  return "?";
}

inline constexpr Check kAllChecks[] = {Check::resiliency, Check::repellence, Check::immunity,
                                       Check::robustness, Check::resistance, Check::stability,
                                       Check::nash};

inline std::optional<Check> check_from_name(std::string_view name) {
  for (Check check : kAllChecks)
    if (check_name(check) == name) return check;
  return std::nullopt;
}

// One point of the maximal (coalition bound, Byzantine bound) frontier.
struct FrontierPair {
  int k = 0;
  int t = 0;
  friend bool operator==(const FrontierPair&, const FrontierPair&) = default;
};

using Frontier = std::vector<FrontierPair>;

struct AnalysisReport {
  std::optional<int> resiliency;
  std::optional<int> repellence;
  std::optional<int> immunity;
  std::optional<int> stability;
  std::optional<bool> nash;
  std::optional<Frontier> robustness;
  std::optional<Frontier> resistance;
  std::map<std::string, std::uint64_t> evaluation_counts;
};

namespace detail {

inline void require_valid_profile(const GameSpec& spec, const PureProfile& profile) {
  if (!spec.valid_profile(profile)) throw std::invalid_argument("invalid profile for this game");
}

enum class CoalitionTest { per_member, coalition_sum };

// True iff some joint deviation of `coalition` strictly improves a member
// (per_member) or the coalition total (coalition_sum) over `profile`.
inline bool coalition_can_improve(const UtilityOracle& game, const PureProfile& profile,
                                  const Coalition& coalition, CoalitionTest test) {
  const GameSpec& spec = game.spec();
  for (const PureProfile& deviated : deviations(spec, profile, coalition)) {
    if (test == CoalitionTest::per_member) {
      for (int member : coalition)
        if (game.utility(profile, member) < game.utility(deviated, member)) return true;
    } else {
      if (coalition_utility(game, profile, coalition) <
          coalition_utility(game, deviated, coalition))
        return true;
    }
  }
  return false;
}

// Ascending-size scan over all coalitions; returns c-1 at the first
// violating size, n if every coalition passes.
inline int max_single_coalition(const UtilityOracle& game, const PureProfile& profile,
                                CoalitionTest test) {
  const GameSpec& spec = game.spec();
  const int n = spec.num_players();
  for (int size = 1; size <= n; ++size)
    for (const Coalition& coalition : coalitions_of_size(all_players(spec), size))
      if (coalition_can_improve(game, profile, coalition, test)) return size - 1;
  return n;
}

// Any violation carried by a coalition of size <= max_coalition together
// with a Byzantine set of size exactly byzantine_size? Byzantine deviations
// include the identity, so the honest-Byzantine cases are covered too.
inline bool joint_violation_at(const UtilityOracle& game, const PureProfile& profile,
                               int max_coalition, int byzantine_size, CoalitionTest test) {
  const GameSpec& spec = game.spec();
  const int n = spec.num_players();
  for (int size = 1; size <= max_coalition; ++size) {
    for (const Coalition& coalition : coalitions_of_size(all_players(spec), size)) {
      const std::vector<int> rest = complement(coalition, n);
      if (static_cast<int>(rest.size()) < byzantine_size) continue;
      for (const Coalition& byzantine : coalitions_of_size(rest, byzantine_size)) {
        for (const PureProfile& disturbed : deviations(spec, profile, byzantine)) {
          for (const PureProfile& deviated : deviations(spec, disturbed, coalition)) {
            if (test == CoalitionTest::per_member) {
              for (int member : coalition)
                if (game.utility(disturbed, member) < game.utility(deviated, member)) return true;
            } else {
              if (coalition_utility(game, disturbed, coalition) <
                  coalition_utility(game, deviated, coalition))
                return true;
            }
          }
        }
      }
    }
  }
  return false;
}

// For k = 1, 2, ... find the largest t (capped at n-k) that survives every
// coalition of size <= k; emit pairs while t >= 1.
inline Frontier max_joint_frontier(const UtilityOracle& game, const PureProfile& profile,
                                   CoalitionTest test) {
  require_valid_profile(game.spec(), profile);
  const int n = game.spec().num_players();
  Frontier frontier;
  for (int k = 1; k <= n - 1; ++k) {
    int max_t = 0;
    for (int t = 1; t <= n - k; ++t) {
      if (joint_violation_at(game, profile, k, t, test)) break;
      max_t = t;
    }
    if (max_t == 0) break;
    frontier.push_back({k, max_t});
  }
  return frontier;
}

}  // namespace detail

// Largest k such that no coalition of size <= k can strictly improve any
// member by jointly deviating.
inline int max_resiliency(const UtilityOracle& game, const PureProfile& profile) {
  detail::require_valid_profile(game.spec(), profile);
  return detail::max_single_coalition(game, profile, detail::CoalitionTest::per_member);
}

// Largest l such that no coalition of size <= l can strictly improve its
// total utility by jointly deviating.
inline int max_repellence(const UtilityOracle& game, const PureProfile& profile) {
  detail::require_valid_profile(game.spec(), profile);
  return detail::max_single_coalition(game, profile, detail::CoalitionTest::coalition_sum);
}

// Largest t such that no Byzantine set of size <= t can strictly hurt any
// outside player. The size-n set has no outsiders and passes vacuously.
inline int max_immunity(const UtilityOracle& game, const PureProfile& profile) {
  const GameSpec& spec = game.spec();
  detail::require_valid_profile(spec, profile);
  const int n = spec.num_players();
  for (int size = 1; size <= n; ++size) {
    for (const Coalition& byzantine : coalitions_of_size(all_players(spec), size)) {
      const std::vector<int> outsiders = complement(byzantine, n);
      for (const PureProfile& disturbed : deviations(spec, profile, byzantine))
        for (int outsider : outsiders)
          if (game.utility(disturbed, outsider) < game.utility(profile, outsider))
            return size - 1;
    }
  }
  return n;
}

inline Frontier robustness_frontier(const UtilityOracle& game, const PureProfile& profile) {
  return detail::max_joint_frontier(game, profile, detail::CoalitionTest::per_member);
}

inline Frontier resistance_frontier(const UtilityOracle& game, const PureProfile& profile) {
  return detail::max_joint_frontier(game, profile, detail::CoalitionTest::coalition_sum);
}

// True iff the coalition's restriction of `profile` is at least as good for
// the coalition total as any joint alternative, against every outside play.
inline bool is_weakly_dominant(const UtilityOracle& game, const PureProfile& profile,
                               const Coalition& coalition) {
  const GameSpec& spec = game.spec();
  detail::require_valid_profile(spec, profile);
  if (!spec.valid_coalition(coalition)) throw std::invalid_argument("invalid coalition");
  const std::vector<int> outsiders = complement(coalition, spec.num_players());
  for (const PureProfile& surrounding : deviations(spec, profile, outsiders))
    for (const PureProfile& deviated : deviations(spec, surrounding, coalition))
      if (coalition_utility(game, surrounding, coalition) <
          coalition_utility(game, deviated, coalition))
        return false;
  return true;
}

// Largest m such that every coalition of size <= m plays a weakly dominant
// joint strategy in `profile`.
inline int max_stability(const UtilityOracle& game, const PureProfile& profile) {
  const GameSpec& spec = game.spec();
  detail::require_valid_profile(spec, profile);
  const int n = spec.num_players();
  for (int size = 1; size <= n; ++size) {
    for (const Coalition& coalition : coalitions_of_size(all_players(spec), size)) {
      const std::vector<int> outsiders = complement(coalition, n);
      for (const PureProfile& surrounding : deviations(spec, profile, outsiders))
        for (const PureProfile& deviated : deviations(spec, surrounding, coalition))
          if (coalition_utility(game, surrounding, coalition) <
              coalition_utility(game, deviated, coalition))
            return size - 1;
    }
  }
  return n;
}

// No player can strictly gain by a unilateral action change.
inline bool is_pure_nash(const UtilityOracle& game, const PureProfile& profile) {
  const GameSpec& spec = game.spec();
  detail::require_valid_profile(spec, profile);
  for (int player = 0; player < spec.num_players(); ++player) {
    PureProfile deviated = profile;
    for (int action = 0; action < spec.num_actions(player); ++action) {
      deviated[player] = action;
      if (game.utility(profile, player) < game.utility(deviated, player)) return false;
    }
  }
  return true;
}

// All pure Nash profiles in enumeration order.
inline std::vector<PureProfile> find_pure_nash(const UtilityOracle& game) {
  std::vector<PureProfile> found;
  for (const PureProfile& profile : enumerate_profiles(game.spec()))
    if (is_pure_nash(game, profile)) found.push_back(profile);
  return found;
}

// Runs the requested checks, each behind its own evaluation counter.
inline AnalysisReport analyze(const UtilityOracle& game, const PureProfile& profile,
                              const std::vector<Check>& checks) {
  detail::require_valid_profile(game.spec(), profile);
  AnalysisReport report;
  for (Check check : kAllChecks) {
    if (std::find(checks.begin(), checks.end(), check) == checks.end()) continue;
    CountingOracle counted(game);
    switch (check) {
      case Check::resiliency: report.resiliency = max_resiliency(counted, profile); break;
      case Check::repellence: report.repellence = max_repellence(counted, profile); break;
      case Check::immunity: report.immunity = max_immunity(counted, profile); break;
      case Check::robustness: report.robustness = robustness_frontier(counted, profile); break;
      case Check::resistance: report.resistance = resistance_frontier(counted, profile); break;
      case Check::stability: report.stability = max_stability(counted, profile); break;
      case Check::nash: report.nash = is_pure_nash(counted, profile); break;
    }
    report.evaluation_counts[std::string(check_name(check))] = counted.evaluations();
  }
  return report;
}

}  // namespace equilib
