#include <cmath>
#include <sstream>
#include <variant>

#include "bifurcate/engine/event.hpp"
#include "bifurcate/engine/interval.hpp"
#include "bifurcate/engine/problem.hpp"
#include "bifurcate/engine/simulation.hpp"
#include "bifurcate/geom/tolerance.hpp"

namespace bifurcate::engine {

std::string_view to_string(Flip flip) { return flip == Flip::TrueAtStar ? "true_at_star" : "false_at_star"; }

Bracket to_bracket(const HalfOpenInterval& interval) {
  if (interval.flip == Flip::TrueAtStar) return {geom::next_up(interval.alpha), interval.beta};
  return {interval.alpha, geom::next_down(interval.beta)};
}

HalfOpenInterval to_half_open(const Bracket& bracket, Flip flip) {
  if (flip == Flip::TrueAtStar) return {geom::next_down(bracket.lo), bracket.hi, flip};
  return {bracket.lo, geom::next_up(bracket.hi), flip};
}

std::string CriticalEvent::describe() const {
  std::ostringstream out;
  out.precision(17);
  switch (kind) {
    case EventKind::Pair:
      out << "pair(" << ids[0] << "," << ids[1] << ")";
      break;
    case EventKind::Triple:
      out << "triple(" << ids[0] << "," << ids[1] << "," << ids[2] << ")";
      break;
    case EventKind::NonPair:
      out << "non-pair";
      break;
  }
  out << "=" << value;
  return out.str();
}

bool holds_at(const Comparison& cmp, double r) {
  return cmp.strictness == Strictness::AtMost ? cmp.event.value <= r : cmp.event.value < r;
}

double threshold(const Comparison& cmp) {
  return cmp.strictness == Strictness::AtMost ? cmp.event.value : geom::next_up(cmp.event.value);
}

ConcreteRun run_concrete(Simulation& sim, double r) {
  ConcreteRun run;
  for (;;) {
    Step step = sim.step();
    if (auto* done = std::get_if<Done>(&step)) {
      run.accept = done->accept;
      return run;
    }
    ++run.comparisons;
    sim.answer(holds_at(std::get<NeedCompare>(step).comparison, r));
  }
}

bool ProblemInstance::decide(double r) const {
  auto sim = simulate();
  return run_concrete(*sim, r).accept;
}

std::uint64_t ProblemInstance::count_criticals_at_most(double r, std::uint64_t cap) const {
  return count_in_range(-INFINITY, r, cap);
}

}  // namespace bifurcate::engine
