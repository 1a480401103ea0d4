#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "builtin_games.hpp"
#include "equilibria.hpp"
#include "game.hpp"
#include "nfg.hpp"

namespace equilib {

// One check, one game family, a player sweep, and a repetition count.
// Parameters other than n stay fixed across the sweep.
struct BenchConfig {
  enum class Family { ioc, fd, nfg };

  Family family = Family::fd;
  IocParams ioc_params;  // n is overridden per sweep step
  FdParams fd_params;
  std::string nfg_text;  // loaded file contents when family == nfg
  Check check = Check::resiliency;
  int min_players = 3;
  int max_players = 3;
  int repetitions = 100;
  // Default profile: all-Diligent for ioc, first-player-forwards for fd,
  // all first actions for nfg.
  std::optional<PureProfile> profile;
};

struct BenchRecord {
  int n = 0;
  double mean_seconds = 0.0;
  std::uint64_t evals = 0;
};

namespace bench_detail {

inline void run_check(const UtilityOracle& game, const PureProfile& profile, Check check) {
  switch (check) {
    case Check::resiliency: max_resiliency(game, profile); break;
    case Check::repellence: max_repellence(game, profile); break;
    case Check::immunity: max_immunity(game, profile); break;
    case Check::robustness: robustness_frontier(game, profile); break;
    case Check::resistance: resistance_frontier(game, profile); break;
    case Check::stability: max_stability(game, profile); break;
    case Check::nash: is_pure_nash(game, profile); break;
  }
}

}  // namespace bench_detail

// Runs the configured check once per repetition for every n in the range.
// Wall time covers the check only; game construction is excluded. Evaluation
// counts come from the oracle instrumentation and are identical across
// repetitions, which makes them the machine-independent column.
inline std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  if (config.min_players < 2) throw std::invalid_argument("bench: need min players >= 2");
  if (config.max_players < config.min_players)
    throw std::invalid_argument("bench: player range is empty");
  if (config.repetitions < 1) throw std::invalid_argument("bench: need at least one repetition");

  std::optional<GameTable> parsed;
  if (config.family == BenchConfig::Family::nfg) {
    parsed = parse_nfg(config.nfg_text);
    const int n = parsed->spec().num_players();
    if (config.min_players != n || config.max_players != n)
      throw std::invalid_argument("bench: player range must match the NFG file (n = " +
                                  std::to_string(n) + ")");
  }

  std::vector<BenchRecord> records;
  for (int n = config.min_players; n <= config.max_players; ++n) {
    std::unique_ptr<UtilityOracle> owned;
    const UtilityOracle* game = nullptr;
    PureProfile profile;

    switch (config.family) {
      case BenchConfig::Family::ioc: {
        IocParams params = config.ioc_params;
        params.n = n;
        auto ioc = std::make_unique<IocGame>(params);
        profile = config.profile.value_or(ioc->all_diligent());
        owned = std::move(ioc);
        game = owned.get();
        break;
      }
      case BenchConfig::Family::fd: {
        FdParams params = config.fd_params;
        params.n = n;
        auto fd = std::make_unique<FdGame>(params);
        profile = config.profile.value_or(fd->single_forwarder());
        owned = std::move(fd);
        game = owned.get();
        break;
      }
      case BenchConfig::Family::nfg: {
        game = &*parsed;
        profile = config.profile.value_or(PureProfile(n, 0));
        break;
      }
    }
    if (!game->spec().valid_profile(profile))
      throw std::invalid_argument("bench: profile does not fit the game");

    double total_seconds = 0.0;
    std::uint64_t evals = 0;
    for (int rep = 0; rep < config.repetitions; ++rep) {
      CountingOracle counted(*game);
      const auto start = std::chrono::steady_clock::now();
      bench_detail::run_check(counted, profile, config.check);
      const auto stop = std::chrono::steady_clock::now();
      total_seconds += std::chrono::duration<double>(stop - start).count();
      if (rep == 0) evals = counted.evaluations();
    }
    records.push_back({n, total_seconds / config.repetitions, evals});
  }
  return records;
}

// Header `n,mean,evals`, one row per record in ascending n, mean seconds
// with six fractional digits.
inline std::string write_csv(std::vector<BenchRecord> records) {
  std::sort(records.begin(), records.end(),
            [](const BenchRecord& a, const BenchRecord& b) { return a.n < b.n; });
  std::string out = "n,mean,evals\n";
  char row[96];
  for (const BenchRecord& record : records) {
    std::snprintf(row, sizeof(row), "%d,%.6f,%llu\n", record.n, record.mean_seconds,
                  static_cast<unsigned long long>(record.evals));
    out += row;
  }
  return out;
}

}  // namespace equilib
