#include <catch2/catch_amalgamated.hpp>

#include "equilib/bench.hpp"
#include "equilib/nfg.hpp"

using namespace equilib;

namespace {

BenchConfig fd_config(Check check, int min_n, int max_n, int reps = 1) {
  BenchConfig config;
  config.family = BenchConfig::Family::fd;
  config.check = check;
  config.min_players = min_n;
  config.max_players = max_n;
  config.repetitions = reps;
  return config;
}

BenchConfig ioc_config(Check check, int min_n, int max_n, int reps = 1) {
  BenchConfig config = fd_config(check, min_n, max_n, reps);
  config.family = BenchConfig::Family::ioc;
  return config;
}

}  // namespace

TEST_CASE("one record per player count, ascending") {
  const auto records = run_bench(fd_config(Check::resiliency, 3, 5, 2));
  REQUIRE(records.size() == 3);
  CHECK(records[0].n == 3);
  CHECK(records[1].n == 4);
  CHECK(records[2].n == 5);
  for (const auto& record : records) {
    CHECK(record.mean_seconds >= 0.0);
    CHECK(record.evals >= 1);
  }
}

TEST_CASE("evaluation counts are repetition- and run-independent") {
  const auto once = run_bench(fd_config(Check::resiliency, 3, 5, 1));
  const auto thrice = run_bench(fd_config(Check::resiliency, 3, 5, 3));
  REQUIRE(once.size() == thrice.size());
  for (std::size_t i = 0; i < once.size(); ++i) CHECK(once[i].evals == thrice[i].evals);
}

TEST_CASE("IOC repellence work grows strictly with n") {
  const auto records = run_bench(ioc_config(Check::repellence, 3, 6));
  REQUIRE(records.size() == 4);
  for (std::size_t i = 1; i < records.size(); ++i) CHECK(records[i].evals > records[i - 1].evals);
}

TEST_CASE("FD immunity exits early at every n") {
  const auto records = run_bench(fd_config(Check::immunity, 3, 10));
  REQUIRE(records.size() == 8);
  for (const auto& record : records) CHECK(record.evals < 1000);
}

TEST_CASE("bench on an NFG file") {
  BenchConfig config;
  config.family = BenchConfig::Family::nfg;
  config.nfg_text = "NFG 1 R \"t\" { \"A\" \"B\" } { 2 2 }\n1 1 1 1 1 1 1 1\n";
  config.check = Check::nash;
  config.min_players = 2;
  config.max_players = 2;
  config.repetitions = 2;
  const auto records = run_bench(config);
  REQUIRE(records.size() == 1);
  CHECK(records[0].n == 2);

  config.max_players = 3;  // range must match the file
  CHECK_THROWS_AS(run_bench(config), std::invalid_argument);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(run_bench(fd_config(Check::nash, 1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(run_bench(fd_config(Check::nash, 4, 3)), std::invalid_argument);
  CHECK_THROWS_AS(run_bench(fd_config(Check::nash, 3, 3, 0)), std::invalid_argument);

  BenchConfig bad_profile = fd_config(Check::nash, 3, 3);
  bad_profile.profile = PureProfile{0, 1};
  CHECK_THROWS_AS(run_bench(bad_profile), std::invalid_argument);
}

TEST_CASE("csv: header only for an empty list") {
  CHECK(write_csv({}) == "n,mean,evals\n");
}

TEST_CASE("csv: exact row formatting") {
  CHECK(write_csv({{3, 0.5, 42}}) == "n,mean,evals\n3,0.500000,42\n");
}

TEST_CASE("csv: rows sort by n regardless of input order") {
  const std::string csv = write_csv({{5, 0.25, 9}, {3, 0.125, 4}, {4, 1.0, 6}});
  CHECK(csv ==
        "n,mean,evals\n"
        "3,0.125000,4\n"
        "4,1.000000,6\n"
        "5,0.250000,9\n");
}
