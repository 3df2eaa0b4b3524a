#pragma once

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "bifurcate/engine/problem.hpp"
#include "json.hpp"

namespace bifurcate::oracle {

/// Reference answer for any supported problem instance, from the brute
/// force solver of its kind.
double oracle_solve(const engine::ProblemInstance& inst);

/// Two answers agree when they differ by at most 1e-12 relative to
/// max(1, |a|, |b|).
double deviation(double a, double b);
inline constexpr double kTolerance = 1e-12;
inline bool agrees(double a, double b) { return deviation(a, b) <= kTolerance; }

struct OracleReport {
  std::string problem;
  std::string digest;
  double oracle_r_star = 0.0;
  std::map<std::string, double> strategy_r_star;
  double max_deviation = 0.0;
  bool pass = true;

  nlohmann::json to_json() const;
};

OracleReport make_report(std::string problem, std::string digest, double oracle_r_star,
                         std::map<std::string, double> strategy_r_star);

/// One random draw from a predicate family: a predicate of r plus two
/// parameters r1 < r2 at which to evaluate it.
struct PredicateDraw {
  std::function<bool(double)> holds;
  double r1 = 0.0;
  double r2 = 0.0;
  std::string label;
};

using PredicateSampler = std::function<PredicateDraw(std::mt19937_64&)>;

struct MonotonicityReport {
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  /// Labels of the first few violating draws.
  std::vector<std::string> witnesses;

  bool ok() const { return violations == 0; }
  nlohmann::json to_json() const;
};

/// Checks that holds(r1) implies holds(r2) on `samples` draws.
MonotonicityReport check_monotonicity(const PredicateSampler& sampler, std::size_t samples, std::mt19937_64& rng);

}  // namespace bifurcate::oracle
