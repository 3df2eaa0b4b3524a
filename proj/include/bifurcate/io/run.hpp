#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "bifurcate/engine/solver.hpp"
#include "json.hpp"

namespace bifurcate::io {

enum class Strategy { Bifurcation, Baseline, Oracle };

inline constexpr Strategy kAllStrategies[] = {Strategy::Bifurcation, Strategy::Baseline, Strategy::Oracle};

std::string_view to_string(Strategy s);
Strategy parse_strategy(std::string_view text);

struct RunOptions {
  Strategy strategy = Strategy::Bifurcation;
  std::optional<std::uint64_t> L;
  std::uint64_t seed = 1;
};

struct RunOutcome {
  std::string problem;
  std::size_t n = 0;
  Strategy strategy = Strategy::Bifurcation;
  std::uint64_t seed = 0;
  double r_star = 0.0;
  std::optional<engine::CriticalEvent> witness;
  bool degenerate = false;
  /// All zero for the oracle strategy apart from wall_time.
  engine::Telemetry telemetry;

  nlohmann::json result_json() const;
  nlohmann::json telemetry_json(bool include_wall_time = true) const;
};

/// RNG seed for one run, mixed from the user seed and the instance digest.
std::uint64_t run_seed(std::uint64_t seed, std::string_view digest);

RunOutcome run(const engine::ProblemInstance& inst, std::string_view digest, const RunOptions& options);

inline constexpr const char* kCsvHeader =
    "problem,n,strategy,r_star,decide_calls,phases_successful,phases_unsuccessful,bifurcations,wall_time,status";

/// One CSV row; status is "ok", "degenerate" or "deviation".
std::string csv_row(const RunOutcome& run, std::string_view status);

/// Shortest decimal text that reads back as the same double.
std::string format_double(double v);

}  // namespace bifurcate::io
