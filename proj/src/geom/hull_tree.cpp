#include "bifurcate/geom/hull_tree.hpp"

#include "bifurcate/error.hpp"

namespace bifurcate::geom {

std::vector<std::size_t> upper_hull(std::span<const Point2> points, std::span<const std::size_t> order) {
  std::vector<std::size_t> hull;
  hull.reserve(order.size());
  for (std::size_t idx : order) {
    while (hull.size() >= 2 &&
           orient(points[hull[hull.size() - 2]], points[hull.back()], points[idx]) >= 0.0) {
      hull.pop_back();
    }
    hull.push_back(idx);
  }
  return hull;
}

bool tangent_not_below(Point2 q, Point2 a, Point2 b, TangentSide side) {
  // Going right, a wins if b is not to the left of q->a; going left the
  // mirror image.
  const double o = orient(q, a, b);
  return side == TangentSide::Left ? o <= 0.0 : o >= 0.0;
}

HullTree::HullTree(std::span<const Point2> points) : points_(points.begin(), points.end()) {
  if (points_.empty()) throw InputError("hull tree over an empty point sequence");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i - 1].x < points_[i].x)) throw InputError("hull tree points must be x-sorted");
  }
  std::size_t cap = 1;
  while (cap < points_.size()) cap <<= 1;
  hulls_.resize(2 * cap);
  build(1, 0, points_.size() - 1);
}

void HullTree::build(std::size_t node, std::size_t lo, std::size_t hi) {
  if (lo == hi) {
    hulls_[node] = {lo};
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  build(2 * node, lo, mid);
  build(2 * node + 1, mid + 1, hi);
  std::vector<std::size_t> merged = hulls_[2 * node];
  merged.insert(merged.end(), hulls_[2 * node + 1].begin(), hulls_[2 * node + 1].end());
  hulls_[node] = upper_hull(points_, merged);
}

void HullTree::collect(std::size_t node, std::size_t lo, std::size_t hi, std::size_t first, std::size_t last,
                       std::vector<std::size_t>& out) const {
  if (last < lo || hi < first) return;
  if (first <= lo && hi <= last) {
    out.push_back(node);
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  collect(2 * node, lo, mid, first, last, out);
  collect(2 * node + 1, mid + 1, hi, first, last, out);
}

std::size_t HullTree::node_tangent(std::size_t node, Point2 q, TangentSide side) const {
  const auto& hull = hulls_[node];
  // Slopes from q along the upper hull are unimodal. Going right we walk the
  // hull left to right; going left we walk it right to left. Ties advance so
  // collinear candidates resolve to the farther vertex.
  auto at = [&](std::size_t i) {
    return side == TangentSide::Left ? points_[hull[i]] : points_[hull[hull.size() - 1 - i]];
  };
  std::size_t lo = 0;
  std::size_t hi = hull.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (tangent_not_below(q, at(mid + 1), at(mid), side)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return side == TangentSide::Left ? hull[lo] : hull[hull.size() - 1 - lo];
}

TangentRay HullTree::tangent(std::size_t first, std::size_t last, Point2 q, TangentSide side) const {
  if (first > last || last >= points_.size()) throw InputError("hull tree tangent: empty or invalid range");
  std::vector<std::size_t> nodes;
  collect(1, 0, points_.size() - 1, first, last, nodes);
  std::size_t best = node_tangent(nodes.front(), q, side);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const std::size_t cand = node_tangent(nodes[i], q, side);
    // Nodes arrive left to right; ties go to the vertex farther from q.
    const bool take = side == TangentSide::Left ? tangent_not_below(q, points_[cand], points_[best], side)
                                                : !tangent_not_below(q, points_[best], points_[cand], side);
    if (take) best = cand;
  }
  return TangentRay{q, points_[best], best};
}

}  // namespace bifurcate::geom
