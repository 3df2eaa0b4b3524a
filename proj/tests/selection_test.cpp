#include <cmath>
#include <random>

#include "bifurcate/engine/solver.hpp"
#include "bifurcate/error.hpp"
#include "bifurcate/oracle/selection.hpp"
#include "bifurcate/problems/generate.hpp"
#include "bifurcate/problems/selection.hpp"
#include "doctest.h"

using namespace bifurcate;
using namespace bifurcate::problems;
using engine::Rng;
using geom::ExpansionMode;

namespace {

bool close(double a, double b) { return std::fabs(a - b) <= 1e-12 * std::max(1.0, std::fabs(b)); }

PlanarObjects three_disks() {
  return std::vector<geom::Disk>{geom::Disk({0, 0}, 1), geom::Disk({10, 0}, 1), geom::Disk({25, 0}, 1)};
}

PlanarObjects random_objects(Rng& rng, std::size_t n, bool segments) {
  if (segments) return random_disjoint_segments(n, rng);
  return random_disjoint_disks(n, rng);
}

}  // namespace

TEST_CASE("three collinear disks") {
  const auto disks = three_disks();
  CHECK(count_intersecting_pairs(disks, ExpansionMode::Additive, 5.0, 10) == 1);
  CHECK(count_intersecting_pairs(disks, ExpansionMode::Additive, 3.9, 10) == 0);
  CHECK(oracle::selection_all_criticals(disks, ExpansionMode::Additive) == std::vector<double>{4.0, 6.5, 11.5});
  Rng rng(1);
  const double want[] = {4.0, 6.5, 11.5};
  for (std::uint64_t k = 1; k <= 3; ++k) {
    SelectionInstance inst(disks, ExpansionMode::Additive, k);
    CHECK(engine::solve(inst, {}, rng).r_star == want[k - 1]);
    CHECK(engine::baseline_solve(inst, rng).r_star == want[k - 1]);
    CHECK(oracle::selection_solve(inst) == want[k - 1]);
  }
}

TEST_CASE("input validation") {
  const auto disks = three_disks();
  CHECK_THROWS_AS(SelectionInstance(disks, ExpansionMode::Additive, 0), InputError);
  CHECK_THROWS_AS(SelectionInstance(disks, ExpansionMode::Additive, 4), InputError);
  PlanarObjects overlapping = std::vector<geom::Disk>{geom::Disk({0, 0}, 1), geom::Disk({1.5, 0}, 1)};
  CHECK_THROWS_AS(SelectionInstance(overlapping, ExpansionMode::Additive, 1), InputError);
  // Two parallel segments never meet.
  PlanarObjects parallel = std::vector<geom::Segment>{geom::Segment::from_endpoints({0, 0}, {1, 0}),
                                                      geom::Segment::from_endpoints({0, 1}, {1, 1})};
  CHECK_THROWS_AS(SelectionInstance(parallel, ExpansionMode::Multiplicative, 1), InfeasibleError);
}

TEST_CASE("count matches the brute predicate on random objects") {
  Rng rng(2);
  for (int trial = 0; trial < 80; ++trial) {
    const bool segments = trial % 2 == 0;
    const auto mode = trial % 4 < 2 ? ExpansionMode::Additive : ExpansionMode::Multiplicative;
    const auto objs = random_objects(rng, 30, segments);
    std::uniform_real_distribution<double> r(mode == ExpansionMode::Additive ? 0.0 : 1.0, 6.0);
    const double x = r(rng);
    const auto want = oracle::selection_brute_count(objs, mode, x);
    CHECK(count_intersecting_pairs(objs, mode, x, ~0ull) == want);
    CHECK(count_intersecting_pairs(objs, mode, x, 3) == std::min<std::uint64_t>(3, want));
  }
}

TEST_CASE("solve equals the k-th sorted critical") {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const bool segments = trial % 2 == 0;
    const auto mode = trial % 4 < 2 ? ExpansionMode::Additive : ExpansionMode::Multiplicative;
    std::uniform_int_distribution<std::size_t> size(2, 50);
    const auto objs = random_objects(rng, size(rng), segments);
    const auto all = oracle::selection_all_criticals(objs, mode);
    std::uniform_int_distribution<std::uint64_t> rank(1, all.size());
    const std::uint64_t k = rank(rng);
    SelectionInstance inst(objs, mode, k);
    const double want = all[k - 1];
    const auto got = engine::solve(inst, {}, rng);
    CHECK(close(got.r_star, want));
    CHECK(close(engine::baseline_solve(inst, rng).r_star, want));
    CHECK(inst.decide(got.r_star));
    // Largest critical strictly below r*: the count there is below k.
    auto below = std::lower_bound(all.begin(), all.end(), want);
    if (below != all.begin()) CHECK_FALSE(inst.decide(*(below - 1)));
  }
}

TEST_CASE("full rank gives the largest finite critical") {
  Rng rng(4);
  const auto objs = random_objects(rng, 12, true);
  const auto all = oracle::selection_all_criticals(objs, ExpansionMode::Additive);
  SelectionInstance inst(objs, ExpansionMode::Additive, all.size());
  CHECK(close(engine::solve(inst, {}, rng).r_star, all.back()));
}

TEST_CASE("range counts agree with enumeration differences") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto objs = random_objects(rng, 40, trial % 2 == 0);
    SelectionInstance inst(objs, ExpansionMode::Additive, 1);
    std::vector<double> all;
    for (std::size_t i = 0; i < 40; ++i) {
      for (std::size_t j = i + 1; j < 40; ++j) {
        if (std::isfinite(inst.critical(i, j))) all.push_back(inst.critical(i, j));
      }
    }
    std::sort(all.begin(), all.end());
    const double r1 = all[all.size() / 4], r2 = all[all.size() / 2];
    const auto in = std::count_if(all.begin(), all.end(), [&](double v) { return v > r1 && v <= r2; });
    CHECK(inst.count_in_range(std::nextafter(r1, INFINITY), r2, ~0ull) == static_cast<std::uint64_t>(in));
    CHECK(inst.enumerate_in_range(std::nextafter(r1, INFINITY), r2).size() == static_cast<std::size_t>(in));
  }
}

TEST_CASE("simulated runs stay within budget") {
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto mode = trial % 2 ? ExpansionMode::Additive : ExpansionMode::Multiplicative;
    const auto objs = random_objects(rng, 25, trial % 4 < 2);
    const auto all = oracle::selection_all_criticals(objs, mode);
    SelectionInstance inst(objs, mode, 1 + trial % all.size());
    const double r = all[trial % all.size()];
    auto sim = inst.simulate();
    CHECK(engine::run_concrete(*sim, r).comparisons <= inst.decision_budget({r, r}));
  }
}
