#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "game.hpp"

namespace equilib {

// Incentivized outsourced computation: n contractors each run either the
// correct algorithm (Diligent, cost cost_diligent) or a cheaper one that is
// right with probability q (Lazy, cost cost_lazy). Matching outputs earn the
// reward r; mismatches earn diligent players a bounty b while lazy players
// split the bounty bill and pay a fine f. Utilities are the closed-form
// expectations, so q never drives any simulated randomness.
struct IocParams {
  int n = 3;
  Payoff cost_diligent = 10;
  Payoff cost_lazy = 5;
  Payoff q = Payoff(1, 2);
  Payoff reward = 20;
  Payoff bounty = 20;
  Payoff fine = Payoff(5, 2);

  void validate() const {
    if (n < 2) throw std::invalid_argument("ioc: need n >= 2");
    if (!(q > 0 && q < 1)) throw std::invalid_argument("ioc: need 0 < q < 1");
    if (!(cost_lazy < cost_diligent))
      throw std::invalid_argument("ioc: need cost_lazy < cost_diligent");
    if (!(cost_diligent < reward)) throw std::invalid_argument("ioc: need cost_diligent < reward");
  }
};

// Forwarding dilemma: each node forwards a flooded packet (paying cost c,
// gaining g) or drops it, gaining g only if someone else forwards.
struct FdParams {
  int n = 3;
  Payoff gain = 2;
  Payoff cost = 1;

  void validate() const {
    if (n < 2) throw std::invalid_argument("fd: need n >= 2");
    if (!(cost < gain)) throw std::invalid_argument("fd: need cost < gain");
  }
};

namespace detail {

inline GameSpec symmetric_two_action_spec(int n, const std::string& first,
                                          const std::string& second) {
  std::vector<std::string> players(n);
  for (int i = 0; i < n; ++i) players[i] = "P" + std::to_string(i + 1);
  std::vector<std::vector<std::string>> actions(n, {first, second});
  return GameSpec(std::move(players), std::move(actions));
}

}  // namespace detail

class IocGame final : public UtilityOracle {
 public:
  static constexpr int kDiligent = 0;
  static constexpr int kLazy = 1;

  explicit IocGame(IocParams params) : params_(std::move(params)), spec_(make_spec(params_)) {}

  const GameSpec& spec() const override { return spec_; }

  // Closed-form expected utility given k = lazy players among the others.
  Payoff utility(const PureProfile& profile, int player) const override {
    const int n = params_.n;
    int k = 0;
    for (int i = 0; i < n; ++i)
      if (i != player && profile[i] == kLazy) ++k;

    const Payoff& r = params_.reward;
    const Payoff& b = params_.bounty;
    const Payoff& f = params_.fine;
    const Payoff& q = params_.q;
    const Payoff miss = 1 - q;

    if (profile[player] == kDiligent) {
      if (k == 0) return r - params_.cost_diligent;
      return r + b * miss - params_.cost_diligent;
    }
    if (k == n - 1) return r - params_.cost_lazy;  // all lazy: outputs agree, boss accepts
    if (k == 0) return r * q - (f + b * (n - 1)) * miss - params_.cost_lazy;
    return r * q - (f + b * (n - k - 1) / (k + 1)) * miss - params_.cost_lazy;
  }

  const IocParams& params() const { return params_; }

  // The desired outcome the benchmarks analyze.
  PureProfile all_diligent() const { return PureProfile(params_.n, kDiligent); }

 private:
  static GameSpec make_spec(const IocParams& params) {
    params.validate();
    return detail::symmetric_two_action_spec(params.n, "Diligent", "Lazy");
  }

  IocParams params_;
  GameSpec spec_;
};

class FdGame final : public UtilityOracle {
 public:
  static constexpr int kForward = 0;
  static constexpr int kDrop = 1;

  explicit FdGame(FdParams params) : params_(std::move(params)), spec_(make_spec(params_)) {}

  const GameSpec& spec() const override { return spec_; }

  Payoff utility(const PureProfile& profile, int player) const override {
    if (profile[player] == kForward) return params_.gain - params_.cost;
    for (int i = 0; i < params_.n; ++i)
      if (i != player && profile[i] == kForward) return params_.gain;
    return 0;
  }

  const FdParams& params() const { return params_; }

  // The desired outcome the benchmarks analyze: one forwarder, rest drop.
  PureProfile single_forwarder() const {
    PureProfile profile(params_.n, kDrop);
    profile[0] = kForward;
    return profile;
  }

 private:
  static GameSpec make_spec(const FdParams& params) {
    params.validate();
    return detail::symmetric_two_action_spec(params.n, "Forward", "Drop");
  }

  FdParams params_;
  GameSpec spec_;
};

inline IocGame ioc_game(IocParams params) { return IocGame(std::move(params)); }
inline FdGame fd_game(FdParams params) { return FdGame(std::move(params)); }

// Dense table of a builtin (or any implicit) game, guarded so n * 2^n payoff
// cells stay within memory.
inline GameTable export_table(const UtilityOracle& game) {
  constexpr int kMaxPlayers = 20;
  if (game.spec().num_players() > kMaxPlayers)
    throw std::invalid_argument("export limited to " + std::to_string(kMaxPlayers) + " players");
  return make_table(game);
}

}  // namespace equilib
