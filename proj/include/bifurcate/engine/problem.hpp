#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "bifurcate/engine/event.hpp"
#include "bifurcate/engine/interval.hpp"
#include "bifurcate/engine/simulation.hpp"

namespace bifurcate::engine {

using Rng = std::mt19937_64;

/// Everything the parametric search needs from a concrete problem.
/// Critical values here are the pair (or triple) values the answer is drawn
/// from; non-pair comparison values never appear in counts or samples.
class ProblemInstance {
 public:
  virtual ~ProblemInstance() = default;

  virtual std::string_view tag() const = 0;
  virtual std::size_t object_count() const = 0;

  /// Concrete decision procedure; increasing in r.
  virtual bool decide(double r) const;
  virtual std::unique_ptr<Simulation> simulate() const = 0;

  virtual HalfOpenInterval initial_interval() const = 0;

  /// Set when the input is already feasible at the bottom of the parameter
  /// domain, so no bracket with a No endpoint exists.
  virtual std::optional<double> degenerate_answer() const { return std::nullopt; }
  Flip flip() const { return initial_interval().flip; }

  /// Upper bound on the comparisons of one decide run with r in the bracket.
  virtual std::uint64_t decision_budget(const Bracket& bracket) const = 0;

  /// Number of generating tuples (pairs, usually), including those whose
  /// critical value is infinite.
  virtual std::uint64_t tuple_count() const = 0;

  /// Independent uniform draws over generating tuples, infinite values dropped.
  virtual std::vector<CriticalEvent> sample_criticals(std::size_t count, Rng& rng) const = 0;

  /// Critical values in the closed range [lo, hi], saturating at cap.
  virtual std::uint64_t count_in_range(double lo, double hi, std::uint64_t cap) const = 0;
  std::uint64_t count_criticals_at_most(double r, std::uint64_t cap) const;

  /// All critical values in [lo, hi], in no particular order.
  virtual std::vector<CriticalEvent> enumerate_in_range(double lo, double hi) const = 0;
};

}  // namespace bifurcate::engine
