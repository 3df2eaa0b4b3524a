#pragma once

#include <vector>

#include "bifurcate/engine/problem.hpp"
#include "bifurcate/geom/hull_tree.hpp"
#include "bifurcate/geom/terrain.hpp"

namespace bifurcate::problems {

/// Do two tips at height h above some pair of base points see each other?
/// Brute force over all pairs and intermediate vertices; touching blocks.
bool decide_visible(const geom::Terrain& terrain, const std::vector<geom::Point2>& bases, double h);

/// Largest tower height at which no two tower tips on the base points see
/// each other over the terrain.
class TowersInstance final : public engine::ProblemInstance {
 public:
  TowersInstance(geom::Terrain terrain, std::vector<geom::Point2> bases);
  /// Bases given as terrain vertex indices.
  TowersInstance(geom::Terrain terrain, const std::vector<std::size_t>& base_vertices);

  const geom::Terrain& terrain() const { return terrain_; }
  const std::vector<geom::Point2>& bases() const { return bases_; }

  /// Potential of pair i < j with the vertex attaining it.
  geom::VertResult potential(std::size_t i, std::size_t j) const;

  /// Whether the potential of pair i < j lies in (h1, h2], decided from
  /// hull-tree tangent rays rather than a scan.
  bool potential_in_interval(std::size_t i, std::size_t j, double h1, double h2) const;

  std::string_view tag() const override { return "towers"; }
  std::size_t object_count() const override { return bases_.size(); }
  bool decide(double h) const override;
  std::unique_ptr<engine::Simulation> simulate() const override;
  engine::HalfOpenInterval initial_interval() const override;
  std::uint64_t decision_budget(const engine::Bracket& bracket) const override;
  std::uint64_t tuple_count() const override;
  std::vector<engine::CriticalEvent> sample_criticals(std::size_t count, engine::Rng& rng) const override;
  std::uint64_t count_in_range(double lo, double hi, std::uint64_t cap) const override;
  std::vector<engine::CriticalEvent> enumerate_in_range(double lo, double hi) const override;

 private:
  engine::CriticalEvent event(std::size_t i, std::size_t j) const;

  geom::Terrain terrain_;
  std::vector<geom::Point2> bases_;
  geom::HullTree hulls_;
  double beta_ = 0.0;
};

}  // namespace bifurcate::problems
