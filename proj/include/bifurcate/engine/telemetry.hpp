#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"

namespace bifurcate::engine {

struct PhaseRecord {
  bool successful = false;
  std::uint64_t tree_nodes = 0;
  std::uint64_t bifurcations = 0;
  std::uint64_t nonpair_bifurcations = 0;
  std::uint64_t decide_calls = 0;
};

struct Telemetry {
  std::uint64_t decide_calls = 0;
  std::uint64_t phases_successful = 0;
  std::uint64_t phases_unsuccessful = 0;
  std::uint64_t bifurcations = 0;
  std::uint64_t nonpair_bifurcations = 0;
  std::uint64_t tree_nodes = 0;
  std::uint64_t shrink_rounds = 0;
  std::uint64_t comparisons_resolved = 0;

  std::uint64_t L = 0;
  std::uint64_t s = 0;
  std::uint64_t decision_budget = 0;
  /// Capped count of criticals left in the bracket when shrinking stopped.
  std::uint64_t shrink_count = 0;
  bool shrink_certified = false;

  std::vector<PhaseRecord> phases;
  double wall_time = 0.0;

  /// Successful phases <= ceil(D/s) + 1 and every unsuccessful phase has
  /// at least floor(D/s) bifurcations. Vacuous before any phase runs.
  bool phase_accounting_holds() const;

  nlohmann::json to_json(bool include_wall_time = true) const;
};

}  // namespace bifurcate::engine
