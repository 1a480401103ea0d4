#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "equilib/builtin_games.hpp"
#include "equilib/equilibria.hpp"
#include "equilib/reference_oracle.hpp"
#include "test_support.hpp"

using namespace equilib;
namespace ref = equilib::reference;

namespace {

const PureProfile kSingleForwarder = {0, 1, 1};
const PureProfile kAllDiligent = {0, 0, 0};

FdGame fd3() { return FdGame(FdParams{3, 2, 1}); }
IocGame ioc3() { return IocGame(IocParams{}); }

}  // namespace

TEST_CASE("FD(3), one forwarder: all six values") {
  const FdGame fd = fd3();
  CHECK(max_resiliency(fd, kSingleForwarder) == 1);
  CHECK(max_repellence(fd, kSingleForwarder) == 3);
  CHECK(max_immunity(fd, kSingleForwarder) == 0);
  CHECK(max_stability(fd, kSingleForwarder) == 0);
  CHECK(robustness_frontier(fd, kSingleForwarder).empty());
  CHECK(resistance_frontier(fd, kSingleForwarder).empty());
  CHECK(is_pure_nash(fd, kSingleForwarder));
}

TEST_CASE("IOC(3), default parameters, all diligent: all six values") {
  const IocGame ioc = ioc3();
  CHECK(max_resiliency(ioc, kAllDiligent) == 1);
  CHECK(max_repellence(ioc, kAllDiligent) == 2);
  CHECK(max_immunity(ioc, kAllDiligent) == 3);
  CHECK(max_stability(ioc, kAllDiligent) == 2);
  CHECK(robustness_frontier(ioc, kAllDiligent) == Frontier{{1, 2}});
  CHECK(resistance_frontier(ioc, kAllDiligent) == Frontier{{1, 2}, {2, 1}});
  CHECK(is_pure_nash(ioc, kAllDiligent));
}

TEST_CASE("IOC stability under the bounty premise r(n-1)/(n-2) >= b > r/(1-q)") {
  IocParams params;
  params.n = 3;
  params.q = Payoff(1, 10);
  params.bounty = 30;
  params.reward = 20;
  params.cost_diligent = 10;
  params.cost_lazy = 5;
  params.fine = Payoff(5, 2);
  const IocGame ioc(params);
  CHECK(max_stability(ioc, kAllDiligent) == 2);  // (n-1)-stable
}

TEST_CASE("constant game: everything maximal") {
  const GameTable game = test_support::constant_game(4, 2, 7);
  const PureProfile profile = {0, 1, 0, 1};
  CHECK(max_resiliency(game, profile) == 4);
  CHECK(max_repellence(game, profile) == 4);
  CHECK(max_immunity(game, profile) == 4);
  CHECK(max_stability(game, profile) == 4);
  CHECK(is_pure_nash(game, profile));

  const GameTable three = test_support::constant_game(3, 2, 0);
  CHECK(robustness_frontier(three, {0, 0, 0}) == Frontier{{1, 2}, {2, 1}});
  CHECK(resistance_frontier(three, {0, 0, 0}) == Frontier{{1, 2}, {2, 1}});
}

TEST_CASE("nash checks") {
  const FdGame fd = fd3();
  CHECK_FALSE(is_pure_nash(fd, {1, 1, 1}));  // anyone gains by forwarding
  CHECK_FALSE(is_pure_nash(fd, {0, 0, 1}));  // a forwarder prefers dropping

  const GameTable constant = test_support::constant_game(2, 3, 1);
  CHECK(is_pure_nash(constant, {2, 0}));
}

TEST_CASE("find_pure_nash: FD has exactly the single-forwarder profiles") {
  const std::vector<PureProfile> expected3 = {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  CHECK(find_pure_nash(fd3()) == expected3);

  const FdGame fd4(FdParams{4, 2, 1});
  const auto found = find_pure_nash(fd4);
  REQUIRE(found.size() == 4);
  for (const PureProfile& profile : found) {
    int forwarders = 0;
    for (int a : profile) forwarders += (a == FdGame::kForward) ? 1 : 0;
    CHECK(forwarders == 1);
  }
}

TEST_CASE("find_pure_nash: constant game returns all S profiles") {
  const GameTable game = test_support::constant_game(2, 2, 3);
  CHECK(find_pure_nash(game).size() == 4);
}

TEST_CASE("find_pure_nash: one player picks its argmax actions") {
  GameSpec spec({"A"}, {{"x", "y", "z"}});
  const GameTable game(spec, {Payoff(1), Payoff(3), Payoff(3)});
  const std::vector<PureProfile> expected = {{1}, {2}};
  CHECK(find_pure_nash(game) == expected);
}

TEST_CASE("weak dominance examples") {
  const FdGame fd = fd3();
  CHECK_FALSE(is_weakly_dominant(fd, {0, 0, 1}, {0}));  // vs (F, D): Drop beats Forward

  const IocGame ioc = ioc3();
  CHECK(is_weakly_dominant(ioc, kAllDiligent, {0}));

  const GameTable constant = test_support::constant_game(3, 2, 5);
  CHECK(is_weakly_dominant(constant, {0, 0, 0}, {0, 2}));
}

TEST_CASE("one-player games") {
  GameSpec spec({"A"}, {{"x", "y"}});
  const GameTable game(spec, {Payoff(2), Payoff(1)});
  CHECK(is_pure_nash(game, {0}));
  CHECK_FALSE(is_pure_nash(game, {1}));
  CHECK(max_resiliency(game, {0}) == 1);
  CHECK(max_resiliency(game, {1}) == 0);
  CHECK(max_immunity(game, {0}) == 1);  // vacuous: no outside player
  CHECK(robustness_frontier(game, {0}).empty());
}

TEST_CASE("invalid profiles are rejected") {
  const FdGame fd = fd3();
  CHECK_THROWS_AS(max_resiliency(fd, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(max_immunity(fd, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(is_weakly_dominant(fd, kSingleForwarder, {1, 0}), std::invalid_argument);
}

TEST_CASE("analyze: FD all checks") {
  const FdGame fd = fd3();
  const AnalysisReport report =
      analyze(fd, kSingleForwarder, {std::begin(kAllChecks), std::end(kAllChecks)});
  CHECK(report.resiliency == 1);
  CHECK(report.repellence == 3);
  CHECK(report.immunity == 0);
  CHECK(report.stability == 0);
  CHECK(report.nash == true);
  CHECK(report.robustness == Frontier{});
  CHECK(report.resistance == Frontier{});
  CHECK(report.evaluation_counts.size() == 7);
  for (const auto& [name, evals] : report.evaluation_counts) CHECK(evals >= 1);
}

TEST_CASE("analyze: IOC all checks") {
  const AnalysisReport report =
      analyze(ioc3(), kAllDiligent, {std::begin(kAllChecks), std::end(kAllChecks)});
  CHECK(report.resiliency == 1);
  CHECK(report.repellence == 2);
  CHECK(report.immunity == 3);
  CHECK(report.stability == 2);
  CHECK(report.nash == true);
  CHECK(report.robustness == Frontier{{1, 2}});
  CHECK(report.resistance == Frontier{{1, 2}, {2, 1}});
}

TEST_CASE("analyze: empty check set leaves every field absent") {
  const AnalysisReport report = analyze(fd3(), kSingleForwarder, {});
  CHECK_FALSE(report.resiliency.has_value());
  CHECK_FALSE(report.repellence.has_value());
  CHECK_FALSE(report.immunity.has_value());
  CHECK_FALSE(report.stability.has_value());
  CHECK_FALSE(report.nash.has_value());
  CHECK_FALSE(report.robustness.has_value());
  CHECK_FALSE(report.resistance.has_value());
  CHECK(report.evaluation_counts.empty());
}

TEST_CASE("analyze: subset fills only what was asked") {
  const AnalysisReport report = analyze(fd3(), kSingleForwarder, {Check::nash, Check::immunity});
  CHECK(report.nash == true);
  CHECK(report.immunity == 0);
  CHECK_FALSE(report.resiliency.has_value());
  CHECK(report.evaluation_counts.count("nash") == 1);
  CHECK(report.evaluation_counts.count("immunity") == 1);
  CHECK(report.evaluation_counts.size() == 2);
}

TEST_CASE("random games: ordering and nash bridges") {
  std::mt19937 rng(53);
  for (int round = 0; round < 60; ++round) {
    const GameTable game = test_support::random_table(rng);
    const PureProfile profile = test_support::random_profile(rng, game.spec());

    const int resiliency = max_resiliency(game, profile);
    const int repellence = max_repellence(game, profile);
    const int stability = max_stability(game, profile);
    const bool nash = is_pure_nash(game, profile);

    CHECK(resiliency <= repellence);
    CHECK(stability <= repellence);
    CHECK(nash == (resiliency >= 1));
    CHECK(nash == (repellence >= 1));
  }
}

TEST_CASE("random games: frontier shape") {
  std::mt19937 rng(59);
  for (int round = 0; round < 60; ++round) {
    const GameTable game = test_support::random_table(rng);
    const PureProfile profile = test_support::random_profile(rng, game.spec());
    const int n = game.spec().num_players();

    for (const Frontier& frontier :
         {robustness_frontier(game, profile), resistance_frontier(game, profile)}) {
      for (std::size_t i = 0; i < frontier.size(); ++i) {
        CHECK(frontier[i].t >= 1);
        CHECK(frontier[i].k + frontier[i].t <= n);
        if (i > 0) {
          CHECK(frontier[i].k > frontier[i - 1].k);
          CHECK(frontier[i].t <= frontier[i - 1].t);
        }
      }
    }
  }
}

TEST_CASE("random games: agreement with the reference oracle") {
  std::mt19937 rng(61);
  for (int round = 0; round < 40; ++round) {
    const GameTable game = test_support::random_table(rng);
    const PureProfile profile = test_support::random_profile(rng, game.spec());

    CHECK(max_resiliency(game, profile) == ref::max_resiliency(game, profile));
    CHECK(max_repellence(game, profile) == ref::max_repellence(game, profile));
    CHECK(max_immunity(game, profile) == ref::max_immunity(game, profile));
    CHECK(max_stability(game, profile) == ref::max_stability(game, profile));
    CHECK(robustness_frontier(game, profile) == ref::robustness_frontier(game, profile));
    CHECK(resistance_frontier(game, profile) == ref::resistance_frontier(game, profile));
  }
}

TEST_CASE("stability at n-1 implies repellence and resistance at the paper's levels") {
  std::mt19937 rng(67);
  int hits = 0;
  for (int round = 0; round < 200; ++round) {
    const GameTable game = test_support::random_table(rng, 2, 3, 2, 2, -2, 2);
    const PureProfile profile = test_support::random_profile(rng, game.spec());
    const int n = game.spec().num_players();
    if (max_stability(game, profile) < n - 1) continue;
    ++hits;
    CHECK(max_repellence(game, profile) >= n - 1);
    for (int l = 1; l <= n - 1; ++l) CHECK(ref::is_lt_resistant(game, profile, l, n - l));
  }
  CHECK(hits > 0);  // the corpus must actually exercise the implication
}
