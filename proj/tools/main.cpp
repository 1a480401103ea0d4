// Command-line front end: analyze a profile of a game, generate NFG files
// for the builtin games, or sweep a check across player counts.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "equilib/bench.hpp"
#include "equilib/builtin_games.hpp"
#include "equilib/equilibria.hpp"
#include "equilib/game.hpp"
#include "equilib/nfg.hpp"
#include "equilib/rational.hpp"
#include "equilib/reference_oracle.hpp"
#include "equilib/report_json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitInternal = 2;

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerifyMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GameSourceFlags {
  std::string nfg_path;
  std::string builtin;
  int players = 0;
  std::vector<std::string> params;
};

struct LoadedGame {
  std::unique_ptr<equilib::UtilityOracle> oracle;
  std::string name;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BadInput("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::map<std::string, equilib::Payoff> parse_params(const std::vector<std::string>& params) {
  std::map<std::string, equilib::Payoff> values;
  for (const std::string& entry : params) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0)
      throw BadInput("--param expects key=value, got '" + entry + "'");
    try {
      values[entry.substr(0, eq)] = equilib::parse_payoff(entry.substr(eq + 1));
    } catch (const std::invalid_argument&) {
      throw BadInput("--param " + entry + ": value is not a rational number");
    }
  }
  return values;
}

equilib::IocParams ioc_params_from(const std::map<std::string, equilib::Payoff>& values, int n) {
  equilib::IocParams params;  // struct defaults
  params.n = n;
  for (const auto& [key, value] : values) {
    if (key == "q") params.q = value;
    else if (key == "r") params.reward = value;
    else if (key == "b") params.bounty = value;
    else if (key == "f") params.fine = value;
    else if (key == "cost_diligent" || key == "c1") params.cost_diligent = value;
    else if (key == "cost_lazy" || key == "cq") params.cost_lazy = value;
    else throw BadInput("unknown ioc parameter '" + key + "'");
  }
  return params;
}

equilib::FdParams fd_params_from(const std::map<std::string, equilib::Payoff>& values, int n) {
  equilib::FdParams params;  // struct defaults
  params.n = n;
  for (const auto& [key, value] : values) {
    if (key == "g") params.gain = value;
    else if (key == "c") params.cost = value;
    else throw BadInput("unknown fd parameter '" + key + "'");
  }
  return params;
}

LoadedGame load_game(const GameSourceFlags& flags) {
  if (!flags.nfg_path.empty() && !flags.builtin.empty())
    throw BadInput("give either --nfg or --builtin, not both");
  if (!flags.nfg_path.empty()) {
    auto document = equilib::parse_nfg_document(read_file(flags.nfg_path));
    std::string name = document.title.empty() ? flags.nfg_path : document.title;
    return {std::make_unique<equilib::GameTable>(std::move(document.table)), std::move(name)};
  }
  if (flags.builtin.empty()) throw BadInput("a game source (--nfg or --builtin) is required");
  if (flags.players < 2) throw BadInput("--builtin requires --players >= 2");
  const auto values = parse_params(flags.params);
  if (flags.builtin == "ioc")
    return {std::make_unique<equilib::IocGame>(ioc_params_from(values, flags.players)), "ioc"};
  if (flags.builtin == "fd")
    return {std::make_unique<equilib::FdGame>(fd_params_from(values, flags.players)), "fd"};
  throw BadInput("unknown builtin game '" + flags.builtin + "' (expected ioc or fd)");
}

// Tokens that parse as non-negative integers are zero-based action indices;
// anything else is matched against the player's action names. Indices always
// work, including for payoff-list files whose labels are synthesized digits.
equilib::PureProfile parse_profile(const equilib::GameSpec& spec, const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      tokens.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  tokens.push_back(current);

  if (static_cast<int>(tokens.size()) != spec.num_players())
    throw BadInput("--profile names " + std::to_string(tokens.size()) + " actions, game has " +
                   std::to_string(spec.num_players()) + " players");

  equilib::PureProfile profile(spec.num_players());
  for (int i = 0; i < spec.num_players(); ++i) {
    const std::string& token = tokens[i];
    if (!token.empty() && token.size() <= 9 &&
        token.find_first_not_of("0123456789") == std::string::npos) {
      const int index = std::stoi(token);
      if (index >= spec.num_actions(i))
        throw BadInput("action index " + token + " out of range for player " +
                       spec.player_name(i));
      profile[i] = index;
      continue;
    }
    const auto& names = spec.action_names(i);
    const auto it = std::find(names.begin(), names.end(), token);
    if (it == names.end())
      throw BadInput("player " + spec.player_name(i) + " has no action named '" + token + "'");
    profile[i] = static_cast<int>(it - names.begin());
  }
  return profile;
}

std::vector<equilib::Check> parse_checks(const std::string& text) {
  std::vector<equilib::Check> checks;
  std::string current;
  const auto flush = [&] {
    if (current.empty()) return;
    if (current == "all") {
      checks.assign(std::begin(equilib::kAllChecks), std::end(equilib::kAllChecks));
    } else if (auto check = equilib::check_from_name(current)) {
      if (std::find(checks.begin(), checks.end(), *check) == checks.end())
        checks.push_back(*check);
    } else {
      throw BadInput("unknown check '" + current + "'");
    }
    current.clear();
  };
  for (char c : text) {
    if (c == ',') flush();
    else current += c;
  }
  flush();
  return checks;
}

void verify_against_reference(const equilib::UtilityOracle& game,
                              const equilib::PureProfile& profile,
                              const std::vector<equilib::Check>& checks,
                              const equilib::AnalysisReport& report) {
  namespace ref = equilib::reference;
  const auto mismatch = [](const std::string& what) {
    throw VerifyMismatch("reference oracle disagrees on " + what);
  };
  for (equilib::Check check : checks) {
    switch (check) {
      case equilib::Check::resiliency:
        if (ref::max_resiliency(game, profile) != *report.resiliency) mismatch("resiliency");
        break;
      case equilib::Check::repellence:
        if (ref::max_repellence(game, profile) != *report.repellence) mismatch("repellence");
        break;
      case equilib::Check::immunity:
        if (ref::max_immunity(game, profile) != *report.immunity) mismatch("immunity");
        break;
      case equilib::Check::robustness:
        if (ref::robustness_frontier(game, profile) != *report.robustness) mismatch("robustness");
        break;
      case equilib::Check::resistance:
        if (ref::resistance_frontier(game, profile) != *report.resistance) mismatch("resistance");
        break;
      case equilib::Check::stability:
        if (ref::max_stability(game, profile) != *report.stability) mismatch("stability");
        break;
      case equilib::Check::nash:
        if (ref::is_k_resilient(game, profile, 1) != *report.nash) mismatch("nash");
        break;
    }
  }
}

std::string render_text(const nlohmann::json& doc) {
  std::ostringstream out;
  out << "game:    " << doc["game"].get<std::string>() << "\n";
  out << "profile:";
  for (const auto& action : doc["profile"]) out << " " << action.get<std::string>();
  out << "\n";
  for (const auto& [key, value] : doc["results"].items())
    out << "  " << key << ": " << value.dump() << "\n";
  out << "evaluations:";
  for (const auto& [key, value] : doc["evaluation_counts"].items())
    out << " " << key << "=" << value.get<std::uint64_t>();
  out << "\n";
  return out.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw BadInput("cannot write '" + path + "'");
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Security equilibria for n-player normal-form games"};
  app.require_subcommand(1);

  GameSourceFlags source;
  std::string profile_text;
  std::string check_text = "all";
  std::string format = "json";
  std::string verify;
  std::string out_path;
  std::string title;
  int min_players = 3;
  int max_players = 3;
  int runs = 100;

  const auto add_source_flags = [&](CLI::App* cmd) {
    cmd->add_option("--nfg", source.nfg_path, "NFG game file");
    cmd->add_option("--builtin", source.builtin, "builtin game: ioc or fd");
    cmd->add_option("--players", source.players, "player count for --builtin");
    cmd->add_option("--param", source.params, "builtin parameter key=value (repeatable)");
  };

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "compute equilibria of one profile");
  add_source_flags(analyze_cmd);
  analyze_cmd->add_option("--profile", profile_text,
                          "comma-separated action names or zero-based indices")
      ->required();
  analyze_cmd->add_option("--check", check_text,
                          "comma-separated: resiliency,repellence,immunity,robustness,"
                          "resistance,stability,nash,all");
  analyze_cmd->add_option("--format", format, "json or text");
  analyze_cmd->add_option("--verify", verify, "'oracle' re-checks via the brute-force oracle");

  CLI::App* generate_cmd = app.add_subcommand("generate", "write a builtin game as an NFG file");
  add_source_flags(generate_cmd);
  generate_cmd->add_option("--out", out_path, "output path (default: stdout)");
  generate_cmd->add_option("--title", title, "game title (default: builtin name)");

  CLI::App* bench_cmd = app.add_subcommand("bench", "sweep one check across player counts");
  add_source_flags(bench_cmd);
  bench_cmd->add_option("--check", check_text, "check to benchmark")->required();
  bench_cmd->add_option("--min-players", min_players, "first player count");
  bench_cmd->add_option("--max-players", max_players, "last player count");
  bench_cmd->add_option("--runs", runs, "repetitions per point (default 100)");
  bench_cmd->add_option("--out", out_path, "CSV path (default: stdout)");
  bench_cmd->add_option("--profile", profile_text, "profile to analyze (NFG games only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (analyze_cmd->parsed()) {
      if (!verify.empty() && verify != "oracle")
        throw BadInput("--verify accepts only 'oracle'");
      if (format != "json" && format != "text") throw BadInput("--format accepts json or text");

      const LoadedGame game = load_game(source);
      const equilib::GameSpec& spec = game.oracle->spec();
      const equilib::PureProfile profile = parse_profile(spec, profile_text);
      const std::vector<equilib::Check> checks = parse_checks(check_text);

      const equilib::AnalysisReport report = equilib::analyze(*game.oracle, profile, checks);
      if (!verify.empty()) verify_against_reference(*game.oracle, profile, checks, report);

      const nlohmann::json doc = equilib::report_to_json(game.name, spec, profile, report);
      std::cout << (format == "json" ? doc.dump(2) + "\n" : render_text(doc));
      return kExitOk;
    }

    if (generate_cmd->parsed()) {
      if (source.builtin.empty()) throw BadInput("generate requires --builtin");
      const LoadedGame game = load_game(source);
      const equilib::GameTable table = equilib::export_table(*game.oracle);
      write_output(out_path, equilib::write_nfg(table, title.empty() ? game.name : title));
      return kExitOk;
    }

    if (bench_cmd->parsed()) {
      equilib::BenchConfig config;
      config.check = [&] {
        auto check = equilib::check_from_name(check_text);
        if (!check) throw BadInput("unknown check '" + check_text + "'");
        return *check;
      }();
      config.min_players = min_players;
      config.max_players = max_players;
      config.repetitions = runs;

      if (!source.nfg_path.empty() && !source.builtin.empty())
        throw BadInput("give either --nfg or --builtin, not both");
      if (!source.nfg_path.empty()) {
        config.family = equilib::BenchConfig::Family::nfg;
        config.nfg_text = read_file(source.nfg_path);
        if (!profile_text.empty()) {
          const equilib::GameTable table = equilib::parse_nfg(config.nfg_text);
          config.profile = parse_profile(table.spec(), profile_text);
        }
      } else if (source.builtin == "ioc") {
        config.family = equilib::BenchConfig::Family::ioc;
        config.ioc_params = ioc_params_from(parse_params(source.params), min_players);
      } else if (source.builtin == "fd") {
        config.family = equilib::BenchConfig::Family::fd;
        config.fd_params = fd_params_from(parse_params(source.params), min_players);
      } else if (source.builtin.empty()) {
        throw BadInput("a game source (--nfg or --builtin) is required");
      } else {
        throw BadInput("unknown builtin game '" + source.builtin + "'");
      }
      if (config.family != equilib::BenchConfig::Family::nfg && !profile_text.empty())
        throw BadInput("--profile is only supported for --nfg benches");

      write_output(out_path, equilib::write_csv(equilib::run_bench(config)));
      return kExitOk;
    }
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const equilib::NfgError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const VerifyMismatch& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
