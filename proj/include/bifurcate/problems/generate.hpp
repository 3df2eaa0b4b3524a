#pragma once

#include <random>
#include <stdexcept>
#include <vector>

#include "bifurcate/geom/planar.hpp"
#include "bifurcate/geom/point.hpp"
#include "bifurcate/geom/terrain.hpp"

namespace bifurcate::problems {

/// Rejection sampling gave up.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxGenerationTries = 1'000'000;

/// n points uniform in [0, side]^dim.
geom::PointSet random_points(std::size_t n, std::size_t dim, double side, std::mt19937_64& rng);

/// n pairwise disjoint disks with radii in [0.2, 1], centers in a square
/// whose side grows with sqrt(n).
std::vector<geom::Disk> random_disjoint_disks(std::size_t n, std::mt19937_64& rng);

/// n pairwise disjoint segments with lengths in [0.5, 2] and uniform
/// directions, placed like random_disjoint_disks.
std::vector<geom::Segment> random_disjoint_segments(std::size_t n, std::mt19937_64& rng);

struct TowersSample {
  geom::Terrain terrain;
  std::vector<std::size_t> bases;  // terrain vertex indices
};

/// Terrain built as a cumulative walk in x with m valley bases; every gap
/// between consecutive bases holds a peak above all bases, so each base
/// pair has a positive potential.
TowersSample random_towers(std::size_t m, std::mt19937_64& rng);

}  // namespace bifurcate::problems
