#pragma once

// JSON shape shared by the CLI and the tests: `results` carries one key per
// requested check, frontiers as arrays of [k, t] pairs.

#include <string>
#include <vector>

#include "json.hpp"

#include "equilibria.hpp"
#include "game.hpp"

namespace equilib {

inline nlohmann::json frontier_to_json(const Frontier& frontier) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const FrontierPair& pair : frontier) pairs.push_back({pair.k, pair.t});
  return pairs;
}

inline nlohmann::json results_to_json(const AnalysisReport& report) {
  nlohmann::json results = nlohmann::json::object();
  if (report.resiliency) results["resiliency"] = *report.resiliency;
  if (report.repellence) results["repellence"] = *report.repellence;
  if (report.immunity) results["immunity"] = *report.immunity;
  if (report.stability) results["stability"] = *report.stability;
  if (report.nash) results["nash"] = *report.nash;
  if (report.robustness) results["robustness"] = frontier_to_json(*report.robustness);
  if (report.resistance) results["resistance"] = frontier_to_json(*report.resistance);
  return results;
}

inline nlohmann::json report_to_json(const std::string& game_name, const GameSpec& spec,
                                     const PureProfile& profile, const AnalysisReport& report) {
  nlohmann::json doc;
  doc["game"] = game_name;
  doc["players"] = spec.player_names();
  nlohmann::json chosen = nlohmann::json::array();
  for (int i = 0; i < spec.num_players(); ++i) chosen.push_back(spec.action_names(i)[profile[i]]);
  doc["profile"] = chosen;
  doc["results"] = results_to_json(report);
  doc["evaluation_counts"] = report.evaluation_counts;
  return doc;
}

}  // namespace equilib
