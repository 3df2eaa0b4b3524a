#pragma once

#include <vector>

#include "bifurcate/engine/problem.hpp"
#include "bifurcate/geom/planar.hpp"
#include "bifurcate/problems/window_scan.hpp"

namespace bifurcate::problems {

/// Maximum matching size in the graph with the given edges.
std::size_t maximum_matching_size(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

/// Smallest expansion at which the disk intersection graph has a perfect
/// matching.
class MatchingInstance final : public engine::ProblemInstance {
 public:
  MatchingInstance(std::vector<geom::Disk> disks, geom::ExpansionMode mode);

  const std::vector<geom::Disk>& disks() const { return disks_; }
  geom::ExpansionMode mode() const { return mode_; }
  double critical(std::size_t i, std::size_t j) const;
  const WindowOrder& windows() const { return windows_; }

  std::string_view tag() const override { return "matching"; }
  std::size_t object_count() const override { return disks_.size(); }
  std::unique_ptr<engine::Simulation> simulate() const override;
  engine::HalfOpenInterval initial_interval() const override;
  std::optional<double> degenerate_answer() const override;
  std::uint64_t decision_budget(const engine::Bracket& bracket) const override;
  std::uint64_t tuple_count() const override;
  std::vector<engine::CriticalEvent> sample_criticals(std::size_t count, engine::Rng& rng) const override;
  std::uint64_t count_in_range(double lo, double hi, std::uint64_t cap) const override;
  std::vector<engine::CriticalEvent> enumerate_in_range(double lo, double hi) const override;

 private:
  std::vector<geom::Disk> disks_;
  geom::ExpansionMode mode_;
  WindowOrder windows_;
  double min_critical_ = 0.0;
  double max_critical_ = 0.0;
  bool degenerate_ = false;
};

}  // namespace bifurcate::problems
