#pragma once

#include "bifurcate/engine/problem.hpp"
#include "bifurcate/geom/point.hpp"

namespace bifurcate::problems {

/// Discrete Frechet distance with one-sided shortcuts: every point of A is
/// visited in order, while the walk along B may skip points.
class FrechetInstance final : public engine::ProblemInstance {
 public:
  FrechetInstance(geom::PointSet a, geom::PointSet b);

  const geom::PointSet& a() const { return a_; }
  const geom::PointSet& b() const { return b_; }

  std::string_view tag() const override { return "dfds"; }
  std::size_t object_count() const override { return a_.size() + b_.size(); }
  std::unique_ptr<engine::Simulation> simulate() const override;
  engine::HalfOpenInterval initial_interval() const override;
  std::uint64_t decision_budget(const engine::Bracket& bracket) const override;
  std::uint64_t tuple_count() const override;
  std::vector<engine::CriticalEvent> sample_criticals(std::size_t count, engine::Rng& rng) const override;
  std::uint64_t count_in_range(double lo, double hi, std::uint64_t cap) const override;
  std::vector<engine::CriticalEvent> enumerate_in_range(double lo, double hi) const override;

  /// Largest bichromatic distance.
  double max_distance() const { return max_distance_; }

 private:
  geom::PointSet a_;
  geom::PointSet b_;
  double max_distance_ = 0.0;
};

}  // namespace bifurcate::problems
