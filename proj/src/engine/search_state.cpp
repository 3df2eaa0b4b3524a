#include "bifurcate/engine/solver.hpp"
#include "bifurcate/error.hpp"
#include "bifurcate/geom/tolerance.hpp"

namespace bifurcate::engine {

SearchState::SearchState(const ProblemInstance& problem, Telemetry& telemetry)
    : problem_(problem), telemetry_(telemetry), flip_(problem.flip()) {}

void SearchState::start() {
  const HalfOpenInterval iv = problem_.initial_interval();
  if (!(iv.alpha < iv.beta)) throw InternalError("initial interval is empty");
  flip_ = iv.flip;
  telemetry_.decide_calls += 2;
  const bool at_alpha = problem_.decide(iv.alpha);
  const bool at_beta = problem_.decide(iv.beta);
  if (at_alpha || !at_beta) {
    throw InternalError("r* outside initial bracket (decide is " + std::string(at_alpha ? "Yes" : "No") +
                        " at alpha and " + (at_beta ? "Yes" : "No") + " at beta)");
  }
  bracket_ = to_bracket(iv);
}

bool SearchState::star_at_most(double x) {
  ++telemetry_.decide_calls;
  return flip_ == Flip::TrueAtStar ? problem_.decide(x) : problem_.decide(geom::next_up(x));
}

std::optional<bool> SearchState::known_at_least(double t) const {
  if (t <= bracket_.lo) return true;
  if (t > bracket_.hi) return false;
  return std::nullopt;
}

void SearchState::raise_lo(double lo, const CriticalEvent* source) {
  if (lo > bracket_.lo) {
    if (lo > bracket_.hi) throw InternalError("bracket inverted while raising its lower end");
    bracket_.lo = lo;
    lo_event_.reset();
  }
  if (lo == bracket_.lo && source && (!lo_event_ || lo_event_->kind == EventKind::NonPair)) lo_event_ = *source;
}

void SearchState::lower_hi(double hi, const CriticalEvent* source) {
  if (hi < bracket_.hi) {
    if (hi < bracket_.lo) throw InternalError("bracket inverted while lowering its upper end");
    bracket_.hi = hi;
    hi_event_.reset();
  }
  if (hi == bracket_.hi && source && (!hi_event_ || hi_event_->kind == EventKind::NonPair)) hi_event_ = *source;
}

bool SearchState::resolve(const Comparison& cmp) {
  const double t = threshold(cmp);
  ++telemetry_.comparisons_resolved;
  const std::optional<bool> known = known_at_least(t);
  const bool holds = known ? *known : !star_at_most(geom::next_down(t));
  if (holds) {
    raise_lo(t, &cmp.event);
  } else {
    lower_hi(geom::next_down(t), &cmp.event);
  }
  return holds;
}

bool SearchState::certify_equality() {
  if (bracket_.singular()) return true;
  if (flip_ == Flip::TrueAtStar) {
    if (!lo_event_ || lo_event_->kind == EventKind::NonPair || lo_event_->value != bracket_.lo) return false;
    if (problem_.count_in_range(geom::next_up(bracket_.lo), bracket_.hi, 1) != 0) return false;
    lower_hi(bracket_.lo, nullptr);
  } else {
    if (!hi_event_ || hi_event_->kind == EventKind::NonPair || hi_event_->value != bracket_.hi) return false;
    if (problem_.count_in_range(bracket_.lo, geom::next_down(bracket_.hi), 1) != 0) return false;
    raise_lo(bracket_.hi, nullptr);
  }
  return true;
}

std::optional<CriticalEvent> SearchState::witness() const {
  const double v = answer();
  std::optional<CriticalEvent> best;
  for (const auto* e : {&lo_event_, &hi_event_}) {
    if (*e && (*e)->value == v && (!best || best->kind == EventKind::NonPair)) best = **e;
  }
  return best;
}

}  // namespace bifurcate::engine
