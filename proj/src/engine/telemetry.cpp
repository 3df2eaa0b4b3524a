#include "bifurcate/engine/telemetry.hpp"

namespace bifurcate::engine {

bool Telemetry::phase_accounting_holds() const {
  if (phases.empty() || s == 0) return true;
  const std::uint64_t max_successful = (decision_budget + s - 1) / s + 1;
  if (phases_successful > max_successful) return false;
  const std::uint64_t min_forks = decision_budget / s;
  for (const auto& p : phases) {
    if (!p.successful && p.bifurcations < min_forks) return false;
  }
  return true;
}

nlohmann::json Telemetry::to_json(bool include_wall_time) const {
  nlohmann::json j;
  j["decide_calls"] = decide_calls;
  j["phases_successful"] = phases_successful;
  j["phases_unsuccessful"] = phases_unsuccessful;
  j["bifurcations"] = bifurcations;
  j["nonpair_bifurcations"] = nonpair_bifurcations;
  j["tree_nodes"] = tree_nodes;
  j["shrink_rounds"] = shrink_rounds;
  j["comparisons_resolved"] = comparisons_resolved;
  j["L"] = L;
  j["s"] = s;
  j["decision_budget"] = decision_budget;
  j["shrink_count"] = shrink_count;
  j["shrink_certified"] = shrink_certified;
  j["phase_accounting_ok"] = phase_accounting_holds();
  nlohmann::json ph = nlohmann::json::array();
  for (const auto& p : phases) {
    ph.push_back({{"successful", p.successful},
                  {"tree_nodes", p.tree_nodes},
                  {"bifurcations", p.bifurcations},
                  {"nonpair_bifurcations", p.nonpair_bifurcations},
                  {"decide_calls", p.decide_calls}});
  }
  j["phases"] = std::move(ph);
  if (include_wall_time) j["wall_time"] = wall_time;
  return j;
}

}  // namespace bifurcate::engine
