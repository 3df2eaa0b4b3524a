#include "bifurcate/oracle/towers.hpp"

#include <algorithm>
#include <cmath>

#include "bifurcate/oracle/caps.hpp"

namespace bifurcate::oracle {

namespace {

// Chord height minus vertex height, negated: how far the vertex pokes above.
long double poke(geom::Point2 a, geom::Point2 b, geom::Point2 p) {
  const long double slope = (static_cast<long double>(b.y) - a.y) / (static_cast<long double>(b.x) - a.x);
  return static_cast<long double>(p.y) - (a.y + slope * (static_cast<long double>(p.x) - a.x));
}

}  // namespace

double towers_potential(const problems::TowersInstance& inst, std::size_t i, std::size_t j) {
  const auto& t = inst.terrain();
  const auto& q = inst.bases();
  long double best = 0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k].x > q[i].x && t[k].x < q[j].x) best = std::max(best, poke(q[i], q[j], t[k]));
  }
  return static_cast<double>(best);
}

bool towers_visible(const problems::TowersInstance& inst, double h) {
  const std::size_t m = inst.bases().size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (towers_potential(inst, i, j) < h) return true;
    }
  }
  return false;
}

double towers_solve(const problems::TowersInstance& inst) {
  const std::size_t m = inst.bases().size();
  require_cap(static_cast<std::uint64_t>(m) * (m - 1) / 2, kMaxPairs, "towers pair count");
  double best = INFINITY;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) best = std::min(best, towers_potential(inst, i, j));
  }
  return best;
}

}  // namespace bifurcate::oracle
