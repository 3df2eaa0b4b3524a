#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "bifurcate/engine/solver.hpp"
#include "bifurcate/error.hpp"
#include "bifurcate/oracle/rsp.hpp"
#include "bifurcate/problems/rsp.hpp"
#include "doctest.h"
#include "support/random_points.hpp"

using namespace bifurcate;
using namespace bifurcate::problems;
using engine::Bracket;
using engine::Rng;
using testing_support::uniform_points;

namespace {

geom::PointSet collinear(std::size_t n) {
  std::vector<double> flat;
  for (std::size_t i = 0; i < n; ++i) {
    flat.push_back(static_cast<double>(i));
    flat.push_back(0.0);
  }
  return {2, flat};
}

RspInstance random_instance(Rng& rng, std::size_t n, std::size_t dim, bool weighted) {
  auto pts = uniform_points(n, dim, 10.0, rng);
  const double a = pts.distance(0, n - 1);
  if (weighted) {
    std::uniform_real_distribution<double> slack(1.0, 2.0);
    return RspInstance(std::move(pts), 0, n - 1, LengthBound{a * slack(rng)});
  }
  std::uniform_int_distribution<std::size_t> k(1, n - 1);
  return RspInstance(std::move(pts), 0, n - 1, HopBound{k(rng)});
}

// Largest edge on the s-t path of a minimum spanning tree (Prim, O(n^2)).
double mst_bottleneck(const geom::PointSet& p, std::size_t s, std::size_t t) {
  const std::size_t n = p.size();
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> parent(n, n);
  std::vector<bool> in(n, false);
  best[s] = 0.0;
  for (std::size_t it = 0; it < n; ++it) {
    std::size_t u = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!in[v] && (u == n || best[v] < best[u])) u = v;
    }
    in[u] = true;
    for (std::size_t v = 0; v < n; ++v) {
      const double d = std::hypot(p[u][0] - p[v][0], p[u][1] - p[v][1],
                                  p.dim() == 3 ? p[u][2] - p[v][2] : 0.0);
      if (!in[v] && d < best[v]) {
        best[v] = d;
        parent[v] = u;
      }
    }
  }
  double worst = 0.0;
  for (std::size_t v = t; v != s; v = parent[v]) worst = std::max(worst, best[v]);
  return worst;
}

bool close(double a, double b) { return std::fabs(a - b) <= 1e-12 * std::max(1.0, std::fabs(b)); }

}  // namespace

TEST_CASE("collinear unit spacing") {
  RspInstance three(collinear(4), 0, 3, HopBound{3});
  CHECK(three.decide(1.0));
  CHECK_FALSE(three.decide(0.99));
  RspInstance one(collinear(4), 0, 3, HopBound{1});
  CHECK_FALSE(one.decide(2.9));
  CHECK(one.decide(3.0));
  CHECK_THROWS_AS(one.decide(0.0), InputError);
}

TEST_CASE("invalid instances are rejected") {
  CHECK_THROWS_AS(RspInstance(collinear(4), 0, 0, HopBound{1}), InputError);
  CHECK_THROWS_AS(RspInstance(collinear(4), 0, 3, HopBound{0}), InputError);
  CHECK_THROWS_AS(RspInstance(collinear(4), 0, 3, HopBound{4}), InputError);
  CHECK_THROWS_AS(RspInstance(collinear(4), 0, 3, LengthBound{2.5}), InputError);
}

TEST_CASE("initial intervals") {
  geom::PointSet six(2, {0.0, 0.0, 6.0, 0.0, 1.0, 1.0, 2.0, 2.0});
  RspInstance hop(six, 0, 1, HopBound{3});
  auto iv = hop.initial_interval();
  CHECK(iv.alpha == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(iv.alpha < 2.0);
  CHECK(iv.beta == 6.0);
  CHECK(iv.flip == engine::Flip::TrueAtStar);

  std::vector<double> flat(20, 0.0);
  flat[2] = 5.0;
  for (std::size_t i = 2; i < 10; ++i) flat[2 * i + 1] = static_cast<double>(i);
  RspInstance weighted(geom::PointSet(2, flat), 0, 1, LengthBound{7.0});
  iv = weighted.initial_interval();
  CHECK(iv.alpha == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(iv.alpha < 0.5);
  CHECK(iv.beta == 5.0);

  RspInstance direct(collinear(4), 0, 3, HopBound{1});
  iv = direct.initial_interval();
  CHECK_FALSE(direct.decide(iv.alpha));
  CHECK(direct.decide(iv.beta));
  Rng rng(1);
  CHECK(engine::solve(direct, {}, rng).r_star == 3.0);
}

TEST_CASE("two points emit only the s-t comparison") {
  RspInstance two(geom::PointSet(2, {0.0, 0.0, 3.0, 4.0}), 0, 1, HopBound{1});
  for (double r : {4.0, 5.0, 6.0}) {
    auto sim = two.simulate();
    auto run = engine::run_concrete(*sim, r);
    CHECK(run.comparisons == 1);
    CHECK(run.accept == (r >= 5.0));
  }
}

TEST_CASE("collinear two-hop instance solves to 2") {
  RspInstance inst(collinear(4), 0, 3, HopBound{2});
  Rng rng(3);
  CHECK(engine::solve(inst, {}, rng).r_star == 2.0);
  CHECK(engine::baseline_solve(inst, rng).r_star == 2.0);
  CHECK(oracle::rsp_solve(inst) == 2.0);
}

TEST_CASE("pair counting") {
  RspInstance inst(collinear(4), 0, 3, HopBound{3});
  CHECK(inst.count_in_range(0.0, 1.0, 100) == 3);
  CHECK(inst.count_in_range(0.0, 0.5, 100) == 0);
  CHECK(inst.count_in_range(0.0, 10.0, 4) == 4);
  CHECK(inst.tuple_count() == 6);

  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t dim = trial % 2 ? 3 : 2;
    auto p = random_instance(rng, 150, dim, false);
    const double lo = 1.0 + trial * 0.1, hi = lo + 2.0;
    std::uint64_t brute = 0;
    for (std::size_t i = 0; i < 150; ++i) {
      for (std::size_t j = i + 1; j < 150; ++j) {
        const double d = p.points().distance(i, j);
        brute += (d >= lo && d <= hi) ? 1 : 0;
      }
    }
    CHECK(p.count_in_range(lo, hi, 1u << 30) == brute);
    CHECK(p.enumerate_in_range(lo, hi).size() == brute);
  }
}

TEST_CASE("decider agrees with the matrix oracle on 200-point sets") {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = trial % 2 ? 3 : 2;
    const bool weighted = trial % 4 >= 2;
    auto inst = random_instance(rng, 200, dim, weighted);
    std::uniform_real_distribution<double> r(0.3, 3.0);
    for (int q = 0; q < 5; ++q) {
      const double x = r(rng);
      CHECK(inst.decide(x) == oracle::rsp_decide(inst, x));
    }
  }
}

TEST_CASE("concrete replay, monotonicity and budget") {
  Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t dim = trial % 2 ? 3 : 2;
    std::uniform_int_distribution<std::size_t> size(2, 40);
    auto inst = random_instance(rng, size(rng), dim, trial % 3 == 0);
    std::uniform_real_distribution<double> r(0.05, 12.0);
    double a = r(rng), b = r(rng);
    if (a > b) std::swap(a, b);
    auto sim = inst.simulate();
    const auto run = engine::run_concrete(*sim, a);
    CHECK(run.accept == oracle::rsp_decide(inst, a));
    CHECK(run.comparisons <= inst.decision_budget(Bracket{a, a}));
    if (inst.decide(a)) CHECK(inst.decide(b));
  }
}

TEST_CASE("solve matches the oracle on small random instances") {
  Rng rng(9);
  for (int trial = 0; trial < 120; ++trial) {
    std::uniform_int_distribution<std::size_t> size(5, 60);
    auto inst = random_instance(rng, size(rng), trial % 2 ? 3 : 2, trial % 3 == 0);
    const double want = oracle::rsp_solve(inst);
    const auto got = engine::solve(inst, {}, rng);
    CHECK(close(got.r_star, want));
    CHECK(close(engine::baseline_solve(inst, rng).r_star, want));
    CHECK(got.telemetry.shrink_certified);
  }
}

TEST_CASE("k = n-1 gives the spanning-tree bottleneck") {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 10 + trial;
    auto pts = uniform_points(n, trial % 2 ? 3 : 2, 10.0, rng);
    const double want = mst_bottleneck(pts, 0, n - 1);
    RspInstance inst(pts, 0, n - 1, HopBound{n - 1});
    CHECK(close(engine::solve(inst, {}, rng).r_star, want));
  }
}
