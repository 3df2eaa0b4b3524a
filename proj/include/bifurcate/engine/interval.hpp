#pragma once

#include <string_view>

namespace bifurcate::engine {

/// Which side of r* the concrete decider answers Yes on, including r* itself.
/// Deciders are always increasing in r (No below, Yes above); the flip says
/// whether the answer exactly at r* is Yes (minimization) or No (towers).
enum class Flip { TrueAtStar, FalseAtStar };

std::string_view to_string(Flip flip);

/// (alpha, beta] under TrueAtStar, [alpha, beta) under FalseAtStar.
/// decide(alpha) = No and decide(beta) = Yes in both cases.
struct HalfOpenInterval {
  double alpha = 0.0;
  double beta = 0.0;
  Flip flip = Flip::TrueAtStar;
};

/// Closed set of doubles [lo, hi] known to contain r*.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double v) const { return lo <= v && v <= hi; }
  bool singular() const { return lo == hi; }
};

Bracket to_bracket(const HalfOpenInterval& interval);
HalfOpenInterval to_half_open(const Bracket& bracket, Flip flip);

}  // namespace bifurcate::engine
