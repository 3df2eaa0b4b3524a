#include "bifurcate/oracle/samplers.hpp"

#include <cmath>
#include <numbers>

#include "bifurcate/geom/point.hpp"
#include "bifurcate/problems/generate.hpp"
#include "bifurcate/problems/towers.hpp"

namespace bifurcate::oracle {

namespace {

std::pair<double, double> parameter_pair(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  double a = u(rng), b = u(rng);
  if (a > b) std::swap(a, b);
  return {a, b};
}

double domain_floor(geom::ExpansionMode mode) { return mode == geom::ExpansionMode::Additive ? 0.0 : 0.5; }

}  // namespace

PredicateSampler disk_predicate_sampler(geom::ExpansionMode mode) {
  return [mode](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> pos(0.0, 10.0), rad(0.1, 2.0);
    const double x1 = pos(rng), y1 = pos(rng), r1 = rad(rng);
    const double x2 = pos(rng), y2 = pos(rng), r2 = rad(rng);
    const geom::Disk a({x1, y1}, r1), b({x2, y2}, r2);
    const auto [lo, hi] = parameter_pair(rng, domain_floor(mode), 8.0);
    return PredicateDraw{[=](double r) { return geom::expanded_disks_intersect(a, b, r, mode); }, lo, hi, "disks"};
  };
}

PredicateSampler segment_predicate_sampler(geom::ExpansionMode mode) {
  return [mode](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> pos(0.0, 10.0), len(0.2, 3.0), ang(0.0, std::numbers::pi);
    std::bernoulli_distribution parallel(0.2);
    const double x1 = pos(rng), y1 = pos(rng), a1 = ang(rng), l1 = len(rng);
    const double x2 = pos(rng), y2 = pos(rng), l2 = len(rng);
    const double a2 = parallel(rng) ? a1 : ang(rng);
    const geom::Segment a({x1, y1}, {std::cos(a1), std::sin(a1)}, l1);
    const geom::Segment b({x2, y2}, {std::cos(a2), std::sin(a2)}, l2);
    const auto [lo, hi] = parameter_pair(rng, domain_floor(mode), 20.0);
    return PredicateDraw{[=](double r) { return geom::expanded_segments_intersect(a, b, r, mode); }, lo, hi,
                         "segments"};
  };
}

PredicateSampler distance_predicate_sampler(std::size_t dim) {
  return [dim](std::mt19937_64& rng) {
    const auto pts = problems::random_points(2, dim, 10.0, rng);
    const double d = pts.distance(0, 1);
    const auto [lo, hi] = parameter_pair(rng, 0.0, 15.0);
    return PredicateDraw{[d](double r) { return d <= r; }, lo, hi, "points"};
  };
}

PredicateSampler visibility_predicate_sampler() {
  return [](std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> size(2, 8);
    auto sample = problems::random_towers(size(rng), rng);
    std::uniform_int_distribution<std::size_t> pick(0, sample.bases.size() - 1);
    std::size_t i = pick(rng), j = pick(rng);
    while (i == j) j = pick(rng);
    if (i > j) std::swap(i, j);
    const std::vector<geom::Point2> pair{sample.terrain[sample.bases[i]], sample.terrain[sample.bases[j]]};
    const auto [lo, hi] = parameter_pair(rng, 1e-6, 8.0);
    return PredicateDraw{[terrain = sample.terrain, pair](double h) { return problems::decide_visible(terrain, pair, h); },
                         lo, hi, "tower tips"};
  };
}

PredicateSampler negated(PredicateSampler sampler) {
  return [sampler = std::move(sampler)](std::mt19937_64& rng) {
    PredicateDraw draw = sampler(rng);
    draw.holds = [inner = draw.holds](double r) { return !inner(r); };
    draw.label = "not " + draw.label;
    return draw;
  };
}

}  // namespace bifurcate::oracle
