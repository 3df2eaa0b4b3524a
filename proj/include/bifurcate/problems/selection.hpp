#pragma once

#include <variant>
#include <vector>

#include "bifurcate/engine/problem.hpp"
#include "bifurcate/geom/planar.hpp"
#include "bifurcate/problems/window_scan.hpp"

namespace bifurcate::problems {

using PlanarObjects = std::variant<std::vector<geom::Segment>, std::vector<geom::Disk>>;

std::size_t object_count(const PlanarObjects& objects);

/// Pairs whose copies expanded by r intersect, by a sweep over x-ranges with
/// the direct geometric test; stops once the count reaches cap.
std::uint64_t count_intersecting_pairs(const PlanarObjects& objects, geom::ExpansionMode mode, double r,
                                       std::uint64_t cap);

/// Growth at which objects i and j first touch; +inf when they never do.
double pair_critical(const PlanarObjects& objects, geom::ExpansionMode mode, std::size_t i, std::size_t j);

/// x-extents of the expanded objects, as used by the window scan.
std::vector<XExtent> x_extents(const PlanarObjects& objects, geom::ExpansionMode mode);

/// k-th smallest expansion distance among pairwise disjoint segments or disks.
class SelectionInstance final : public engine::ProblemInstance {
 public:
  SelectionInstance(PlanarObjects objects, geom::ExpansionMode mode, std::uint64_t k);

  const PlanarObjects& objects() const { return objects_; }
  geom::ExpansionMode mode() const { return mode_; }
  std::uint64_t k() const { return k_; }
  double critical(std::size_t i, std::size_t j) const { return pair_critical(objects_, mode_, i, j); }
  const WindowOrder& windows() const { return windows_; }

  std::string_view tag() const override { return "selection"; }
  std::size_t object_count() const override { return windows_.size(); }
  std::unique_ptr<engine::Simulation> simulate() const override;
  engine::HalfOpenInterval initial_interval() const override;
  std::uint64_t decision_budget(const engine::Bracket& bracket) const override;
  std::uint64_t tuple_count() const override;
  std::vector<engine::CriticalEvent> sample_criticals(std::size_t count, engine::Rng& rng) const override;
  std::uint64_t count_in_range(double lo, double hi, std::uint64_t cap) const override;
  std::vector<engine::CriticalEvent> enumerate_in_range(double lo, double hi) const override;

 private:
  PlanarObjects objects_;
  geom::ExpansionMode mode_;
  std::uint64_t k_;
  WindowOrder windows_;
  double beta_ = 0.0;
};

}  // namespace bifurcate::problems
