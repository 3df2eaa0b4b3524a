#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bifurcate/geom/planar.hpp"

namespace bifurcate::geom {

enum class TangentSide {
  /// Query point lies strictly left of the range; the ray points right.
  Left,
  /// Query point lies strictly right of the range; the ray points left.
  Right,
};

struct TangentRay {
  Point2 origin;
  Point2 through;
  std::size_t vertex = 0;  // index into the tree's point sequence
};

/// Balanced binary tree over an x-sorted point sequence; every node keeps
/// the upper convex hull of the points below it. Read-only after build.
class HullTree {
 public:
  explicit HullTree(std::span<const Point2> points);

  std::size_t size() const { return points_.size(); }
  const Point2& point(std::size_t i) const { return points_[i]; }

  /// Topmost tangent ray from q over points [first, last] (inclusive),
  /// assembled from the O(log n) canonical nodes covering the range.
  TangentRay tangent(std::size_t first, std::size_t last, Point2 q, TangentSide side) const;

  /// Upper hull stored at a node, as indices into the point sequence.
  std::span<const std::size_t> node_hull(std::size_t node) const { return hulls_[node]; }
  std::size_t node_count() const { return hulls_.size(); }

 private:
  void build(std::size_t node, std::size_t lo, std::size_t hi);
  void collect(std::size_t node, std::size_t lo, std::size_t hi, std::size_t first, std::size_t last,
               std::vector<std::size_t>& out) const;
  std::size_t node_tangent(std::size_t node, Point2 q, TangentSide side) const;

  std::vector<Point2> points_;
  std::vector<std::vector<std::size_t>> hulls_;
};

/// Upper hull (x-increasing, collinear interior points dropped) of indices
/// into an x-sorted point sequence.
std::vector<std::size_t> upper_hull(std::span<const Point2> points, std::span<const std::size_t> order);

/// True when the ray from q through a is above-or-equal the ray from q
/// through b on the given side (higher slope going right, lower slope going left).
bool tangent_not_below(Point2 q, Point2 a, Point2 b, TangentSide side);

}  // namespace bifurcate::geom
