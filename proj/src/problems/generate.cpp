#include "bifurcate/problems/generate.hpp"

#include <cmath>
#include <numbers>

namespace bifurcate::problems {

namespace {

double placement_side(std::size_t n) { return 3.0 * std::sqrt(static_cast<double>(n)) + 4.0; }

template <class Object, class Draw, class Clash>
std::vector<Object> rejection_sample(std::size_t n, Draw&& draw, Clash&& clash) {
  std::vector<Object> out;
  std::size_t tries = 0;
  while (out.size() < n) {
    if (++tries > kMaxGenerationTries) {
      throw GenerationError("rejection sampling failed after " + std::to_string(kMaxGenerationTries) + " tries");
    }
    Object candidate = draw();
    bool ok = true;
    for (const auto& other : out) {
      if (clash(candidate, other)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(candidate);
  }
  return out;
}

}  // namespace

geom::PointSet random_points(std::size_t n, std::size_t dim, double side, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, side);
  std::vector<double> flat(n * dim);
  for (double& x : flat) x = u(rng);
  return {dim, std::move(flat)};
}

std::vector<geom::Disk> random_disjoint_disks(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> pos(0.0, placement_side(n));
  std::uniform_real_distribution<double> rad(0.2, 1.0);
  return rejection_sample<geom::Disk>(
      n,
      [&] {
        const double x = pos(rng), y = pos(rng);
        return geom::Disk({x, y}, rad(rng));
      },
      [](const geom::Disk& a, const geom::Disk& b) {
        return geom::distance(a.center(), b.center()) <= a.radius() + b.radius();
      });
}

std::vector<geom::Segment> random_disjoint_segments(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> pos(0.0, placement_side(n));
  std::uniform_real_distribution<double> len(0.5, 2.0);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  return rejection_sample<geom::Segment>(
      n,
      [&] {
        const double x = pos(rng), y = pos(rng), a = angle(rng);
        return geom::Segment({x, y}, {std::cos(a), std::sin(a)}, len(rng));
      },
      [](const geom::Segment& a, const geom::Segment& b) { return geom::segments_intersect(a, b); });
}

TowersSample random_towers(std::size_t m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> step(0.5, 1.5);
  std::uniform_real_distribution<double> base_height(0.0, 2.0);
  std::uniform_real_distribution<double> peak_height(2.5, 5.0);
  std::uniform_real_distribution<double> any_height(0.0, 5.0);
  std::uniform_int_distribution<int> extra(0, 2);
  std::vector<geom::Point2> vertices;
  std::vector<std::size_t> bases;
  double x = 0.0;
  auto add = [&](double y) {
    vertices.push_back({x, y});
    x += step(rng);
  };
  for (int e = extra(rng); e > 0; --e) add(any_height(rng));
  for (std::size_t t = 0; t < m; ++t) {
    bases.push_back(vertices.size());
    add(base_height(rng));
    if (t + 1 == m) break;
    const int before = extra(rng), after = extra(rng);
    for (int e = 0; e < before; ++e) add(any_height(rng));
    add(peak_height(rng));
    for (int e = 0; e < after; ++e) add(any_height(rng));
  }
  for (int e = extra(rng); e > 0; --e) add(any_height(rng));
  return {geom::Terrain(std::move(vertices)), std::move(bases)};
}

}  // namespace bifurcate::problems
