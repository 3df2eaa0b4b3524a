#include "bifurcate/oracle/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "bifurcate/error.hpp"
#include "bifurcate/oracle/frechet.hpp"
#include "bifurcate/oracle/matching.hpp"
#include "bifurcate/oracle/rsp.hpp"
#include "bifurcate/oracle/selection.hpp"
#include "bifurcate/oracle/towers.hpp"

namespace bifurcate::oracle {

double oracle_solve(const engine::ProblemInstance& inst) {
  if (const auto* p = dynamic_cast<const problems::RspInstance*>(&inst)) return rsp_solve(*p);
  if (const auto* p = dynamic_cast<const problems::FrechetInstance*>(&inst)) return dfds_solve(*p);
  if (const auto* p = dynamic_cast<const problems::SelectionInstance*>(&inst)) return selection_solve(*p);
  if (const auto* p = dynamic_cast<const problems::MatchingInstance*>(&inst)) return matching_solve(*p);
  if (const auto* p = dynamic_cast<const problems::TowersInstance*>(&inst)) return towers_solve(*p);
  throw InputError("no oracle for problem '" + std::string(inst.tag()) + "'");
}

double deviation(double a, double b) {
  if (a == b) return 0.0;
  return std::fabs(a - b) / std::max({1.0, std::fabs(a), std::fabs(b)});
}

nlohmann::json OracleReport::to_json() const {
  return {{"problem", problem},
          {"digest", digest},
          {"oracle_r_star", oracle_r_star},
          {"strategy_r_star", strategy_r_star},
          {"max_deviation", max_deviation},
          {"pass", pass}};
}

OracleReport make_report(std::string problem, std::string digest, double oracle_r_star,
                         std::map<std::string, double> strategy_r_star) {
  OracleReport report{std::move(problem), std::move(digest), oracle_r_star, std::move(strategy_r_star)};
  for (const auto& [name, value] : report.strategy_r_star) {
    report.max_deviation = std::max(report.max_deviation, deviation(value, oracle_r_star));
  }
  report.pass = report.max_deviation <= kTolerance;
  return report;
}

nlohmann::json MonotonicityReport::to_json() const {
  return {{"trials", trials}, {"violations", violations}, {"witnesses", witnesses}};
}

MonotonicityReport check_monotonicity(const PredicateSampler& sampler, std::size_t samples, std::mt19937_64& rng) {
  MonotonicityReport report;
  for (std::size_t t = 0; t < samples; ++t) {
    PredicateDraw draw = sampler(rng);
    if (draw.r1 > draw.r2) std::swap(draw.r1, draw.r2);
    ++report.trials;
    if (draw.holds(draw.r1) && !draw.holds(draw.r2)) {
      ++report.violations;
      if (report.witnesses.size() < 10) {
        report.witnesses.push_back(draw.label + " r1=" + std::to_string(draw.r1) + " r2=" + std::to_string(draw.r2));
      }
    }
  }
  return report;
}

}  // namespace bifurcate::oracle
