#include <cmath>
#include <random>

#include "bifurcate/engine/solver.hpp"
#include "bifurcate/error.hpp"
#include "bifurcate/oracle/towers.hpp"
#include "bifurcate/problems/generate.hpp"
#include "bifurcate/problems/towers.hpp"
#include "doctest.h"

using namespace bifurcate;
using namespace bifurcate::problems;
using engine::Rng;
using geom::Point2;

namespace {

bool close(double a, double b) { return std::fabs(a - b) <= 1e-12 * std::max(1.0, std::fabs(b)); }

geom::Terrain double_peak() { return geom::Terrain({{0, 0}, {1, 2}, {2, 0}, {3, 2}, {4, 0}}); }

TowersInstance random_instance(Rng& rng, std::size_t m) {
  auto sample = random_towers(m, rng);
  return TowersInstance(sample.terrain, sample.bases);
}

}  // namespace

TEST_CASE("double peak visibility") {
  const std::vector<Point2> q{{0, 0}, {2, 0}, {4, 0}};
  CHECK_FALSE(decide_visible(double_peak(), q, 2.0));
  CHECK(decide_visible(double_peak(), q, 2.01));
  TowersInstance inst(double_peak(), q);
  CHECK_FALSE(inst.decide(2.0));
  CHECK(inst.decide(2.01));
  CHECK_THROWS_AS(inst.decide(0.0), InputError);
}

TEST_CASE("double peak potentials and solve") {
  TowersInstance inst(double_peak(), std::vector<std::size_t>{0, 2, 4});
  CHECK(inst.potential(0, 2).value == 2.0);
  CHECK(inst.potential_in_interval(0, 2, 1.5, 2.5));
  CHECK_FALSE(inst.potential_in_interval(0, 2, 2.0, 3.0));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      CHECK(inst.potential_in_interval(i, j, 0.0, 100.0));
      CHECK_FALSE(inst.potential_in_interval(i, j, 2.5, 100.0));
    }
  }
  Rng rng(1);
  const auto res = engine::solve(inst, {}, rng);
  CHECK(res.r_star == 2.0);
  CHECK(engine::baseline_solve(inst, rng).r_star == 2.0);
  CHECK(oracle::towers_solve(inst) == 2.0);
}

TEST_CASE("single blocker") {
  geom::Terrain t({{0, 0}, {1, 5}, {2, 0}});
  const std::vector<Point2> q{{0, 0}, {2, 0}};
  CHECK_FALSE(decide_visible(t, q, 5.0));
  CHECK(decide_visible(t, q, std::nextafter(5.0, 6.0)));
  TowersInstance inst(t, q);
  Rng rng(2);
  CHECK(engine::solve(inst, {}, rng).r_star == 5.0);
}

TEST_CASE("pairs without a blocker") {
  // The only intermediate vertex lies below the chord.
  geom::Terrain valley({{0, 0}, {1, -1}, {2, 0}});
  const std::vector<Point2> q{{0, 0}, {2, 0}};
  for (double h : {1e-9, 0.5, 3.0}) CHECK(decide_visible(valley, q, h));
  CHECK_THROWS_AS(TowersInstance(valley, q), DegenerateError);
  // Consecutive bases with nothing strictly between them.
  CHECK_THROWS_AS(TowersInstance(double_peak(), std::vector<std::size_t>{0, 1}), DegenerateError);
}

TEST_CASE("bases on edge interiors") {
  geom::Terrain t({{0, 0}, {2, 0}, {3, 4}, {4, 0}, {6, 0}});
  TowersInstance inst(t, std::vector<Point2>{{1, 0}, {5, 0}});
  Rng rng(3);
  CHECK(engine::solve(inst, {}, rng).r_star == 4.0);
  CHECK_THROWS_AS(TowersInstance(t, std::vector<Point2>{{1, 1}, {5, 0}}), InputError);
  CHECK_THROWS_AS(TowersInstance(t, std::vector<Point2>{{5, 0}, {1, 0}}), InputError);
}

TEST_CASE("tangent interval test agrees with the scan") {
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> size(2, 15);
    auto inst = random_instance(rng, size(rng));
    const std::size_t m = inst.bases().size();
    std::uniform_real_distribution<double> h(0.0, 6.0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        double h1 = h(rng), h2 = h(rng);
        if (h1 == h2) continue;
        if (h1 > h2) std::swap(h1, h2);
        const double v = inst.potential(i, j).value;
        CHECK(inst.potential_in_interval(i, j, h1, h2) == (h1 < v && v <= h2));
        // Intervals with an endpoint exactly on the potential.
        CHECK(inst.potential_in_interval(i, j, std::min(h1, v / 2), v));
        CHECK_FALSE(inst.potential_in_interval(i, j, v, v + 1.0));
      }
    }
  }
}

TEST_CASE("visibility flips exactly above the minimum potential") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = random_instance(rng, 2 + trial % 20);
    double h = INFINITY;
    for (std::size_t i = 0; i < inst.bases().size(); ++i) {
      for (std::size_t j = i + 1; j < inst.bases().size(); ++j) h = std::min(h, inst.potential(i, j).value);
    }
    CHECK(close(h, oracle::towers_solve(inst)));
    CHECK_FALSE(decide_visible(inst.terrain(), inst.bases(), h));
    CHECK_FALSE(inst.decide(h));
    CHECK(decide_visible(inst.terrain(), inst.bases(), std::nextafter(h, INFINITY)));
    CHECK(inst.decide(std::nextafter(h, INFINITY)));
    const double above = h * (1 + 1e-9), below = h * (1 - 1e-9);
    CHECK(oracle::towers_visible(inst, above));
    CHECK_FALSE(oracle::towers_visible(inst, below));
  }
}

TEST_CASE("solve matches the brute minimum") {
  Rng rng(6);
  for (int trial = 0; trial < 150; ++trial) {
    std::uniform_int_distribution<std::size_t> size(2, 30);
    auto inst = random_instance(rng, size(rng));
    const double want = oracle::towers_solve(inst);
    const auto got = engine::solve(inst, {}, rng);
    CHECK(close(got.r_star, want));
    CHECK(close(engine::baseline_solve(inst, rng).r_star, want));
    REQUIRE(got.witness);
    const auto& w = *got.witness;
    CHECK(w.kind == engine::EventKind::Triple);
    // The witness tip segment touches its vertex at h*.
    CHECK(geom::height_above_chord(inst.bases()[w.ids[0]], inst.bases()[w.ids[1]], inst.terrain()[w.ids[2]]) ==
          got.r_star);
  }
}
