#pragma once

#include <cstddef>
#include <variant>

#include "bifurcate/engine/problem.hpp"
#include "bifurcate/geom/point.hpp"

namespace bifurcate::problems {

struct HopBound {
  std::size_t k = 1;
};

struct LengthBound {
  double w = 0.0;
};

/// Reverse shortest path in the unit-disk (2D) or unit-ball (3D) graph:
/// the smallest r for which G(r) has an s-t path of at most k edges, or of
/// Euclidean length at most w.
class RspInstance final : public engine::ProblemInstance {
 public:
  using Bound = std::variant<HopBound, LengthBound>;

  RspInstance(geom::PointSet points, std::size_t s, std::size_t t, Bound bound);

  const geom::PointSet& points() const { return points_; }
  std::size_t source() const { return s_; }
  std::size_t target() const { return t_; }
  const Bound& bound() const { return bound_; }
  bool weighted() const { return std::holds_alternative<LengthBound>(bound_); }
  /// Euclidean distance between s and t.
  double span() const { return span_; }

  std::string_view tag() const override { return "udg-rsp"; }
  std::size_t object_count() const override { return points_.size(); }
  bool decide(double r) const override;
  std::unique_ptr<engine::Simulation> simulate() const override;
  engine::HalfOpenInterval initial_interval() const override;
  std::uint64_t decision_budget(const engine::Bracket& bracket) const override;
  std::uint64_t tuple_count() const override;
  std::vector<engine::CriticalEvent> sample_criticals(std::size_t count, engine::Rng& rng) const override;
  std::uint64_t count_in_range(double lo, double hi, std::uint64_t cap) const override;
  std::vector<engine::CriticalEvent> enumerate_in_range(double lo, double hi) const override;

  // Grid parameters shared by the decider and its budget.
  double cell_factor() const { return cell_factor_; }
  double lower_bound() const { return lower_; }
  std::int64_t max_cell() const { return max_cell_; }

 private:
  geom::PointSet points_;
  std::size_t s_;
  std::size_t t_;
  Bound bound_;
  double span_ = 0.0;
  double cell_factor_ = 0.0;
  double lower_ = 0.0;
  std::int64_t max_cell_ = 0;
};

}  // namespace bifurcate::problems
