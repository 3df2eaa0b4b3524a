#include <algorithm>
#include <chrono>
#include <cmath>

#include "bifurcate/engine/solver.hpp"
#include "bifurcate/error.hpp"
#include "bifurcate/geom/tolerance.hpp"
#include "bifurcate/log.hpp"

namespace bifurcate::engine {

std::uint64_t auto_L(std::size_t n, std::uint64_t budget) {
  const double nn = static_cast<double>(std::max<std::size_t>(n, 1));
  const double d = static_cast<double>(std::max<std::uint64_t>(budget, 1));
  const double raw = std::ceil(std::pow(nn, 1.6) / std::pow(d, 1.2));
  const double cap = nn * nn;
  return static_cast<std::uint64_t>(std::clamp(raw, 1.0, cap));
}

std::uint64_t branch_budget(std::uint64_t budget, std::uint64_t L) {
  const auto s = static_cast<std::uint64_t>(std::floor(static_cast<double>(budget) / std::sqrt(static_cast<double>(L))));
  return std::max<std::uint64_t>(1, s);
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool settle_degenerate(const ProblemInstance& problem, SolveResult& result) {
  const auto value = problem.degenerate_answer();
  if (!value) return false;
  result.r_star = *value;
  result.degenerate = true;
  result.final_interval = {*value, *value, problem.flip()};
  return true;
}

}  // namespace

SolveResult solve(const ProblemInstance& problem, const SolveOptions& options, Rng& rng) {
  const auto start = Clock::now();
  SolveResult result;
  Telemetry& tel = result.telemetry;
  if (settle_degenerate(problem, result)) return result;
  SearchState state(problem, tel);
  state.start();

  const std::uint64_t L = options.L.value_or(auto_L(problem.object_count(), problem.decision_budget(state.bracket())));
  shrink_interval(state, ShrinkOptions{L}, rng);

  const std::uint64_t budget = std::max<std::uint64_t>(1, problem.decision_budget(state.bracket()));
  const std::uint64_t s = branch_budget(budget, L);
  tel.decision_budget = budget;
  tel.s = s;
  log().info("{}: n={} L={} D={} s={}", problem.tag(), problem.object_count(), L, budget, s);

  // Each phase advances the simulation by at least one comparison.
  const std::uint64_t max_phases = 4 * budget + 64;
  std::unique_ptr<Simulation> sim = problem.simulate();
  while (!state.certify_equality()) {
    if (tel.phases.size() >= max_phases) throw InternalError("phase limit exceeded; decision budget is unsound");
    PhaseResult phase = run_phase(state, *sim, s, budget);
    sim = std::move(phase.resume);
    if (phase.finished) break;
  }
  state.certify_equality();

  result.r_star = state.answer();
  result.witness = state.witness();
  result.final_interval = to_half_open(state.bracket(), state.flip());
  tel.wall_time = seconds_since(start);
  return result;
}

SolveResult baseline_solve(const ProblemInstance& problem, Rng& rng) {
  const auto start = Clock::now();
  SolveResult result;
  Telemetry& tel = result.telemetry;
  if (settle_degenerate(problem, result)) return result;
  SearchState state(problem, tel);
  state.start();
  shrink_interval(state, ShrinkOptions{4096}, rng);

  const Bracket b = state.bracket();
  std::vector<CriticalEvent> values = problem.enumerate_in_range(b.lo, b.hi);
  std::sort(values.begin(), values.end(), [](const CriticalEvent& x, const CriticalEvent& y) {
    if (x.value != y.value) return x.value < y.value;
    return x.kind < y.kind;
  });
  values.erase(std::unique(values.begin(), values.end(),
                           [](const CriticalEvent& x, const CriticalEvent& y) { return x.value == y.value; }),
               values.end());
  if (!b.singular()) {
    std::ptrdiff_t below = -1;
    auto above = static_cast<std::ptrdiff_t>(values.size());
    while (above - below > 1) {
      const std::ptrdiff_t mid = below + (above - below) / 2;
      if (state.star_at_most(values[mid].value)) {
        above = mid;
      } else {
        below = mid;
      }
    }
    if (above == static_cast<std::ptrdiff_t>(values.size())) {
      throw InternalError("baseline: no critical value in the bracket lies at or above r*");
    }
    state.lower_hi(values[above].value, &values[above]);
    if (below >= 0) state.raise_lo(geom::next_up(values[below].value), nullptr);
  }
  // Only criticals equal to hi remain in the bracket, and r* is one of them.
  result.r_star = state.bracket().hi;
  const auto hit = std::find_if(values.begin(), values.end(),
                                [&](const CriticalEvent& e) { return e.value == result.r_star; });
  if (hit != values.end()) result.witness = *hit;
  result.final_interval = to_half_open(state.bracket(), state.flip());
  tel.wall_time = seconds_since(start);
  return result;
}

}  // namespace bifurcate::engine
