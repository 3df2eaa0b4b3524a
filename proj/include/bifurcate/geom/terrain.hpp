#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bifurcate/geom/planar.hpp"

namespace bifurcate::geom {

/// x-monotone polyline p_1..p_n with strictly increasing x, n >= 2.
class Terrain {
 public:
  explicit Terrain(std::vector<Point2> vertices);

  std::size_t size() const { return vertices_.size(); }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }
  std::span<const Point2> vertices() const { return vertices_; }

  double min_x() const { return vertices_.front().x; }
  double max_x() const { return vertices_.back().x; }
  /// Height of the polyline at x (x within [min_x, max_x]).
  double height_at(double x) const;

  /// Vertex indices k with a.x < p_k.x < b.x as a half-open [first, last).
  std::pair<std::size_t, std::size_t> strictly_between(double ax, double bx) const;

 private:
  std::vector<Point2> vertices_;
};

/// Signed vertical offset of p above the line through a and b, evaluated
/// at p.x. Every potential computation funnels through this one formula.
inline double height_above_chord(Point2 a, Point2 b, Point2 p) {
  const double t = (p.x - a.x) / (b.x - a.x);
  return p.y - (a.y + t * (b.y - a.y));
}

struct VertResult {
  double value = 0.0;
  /// Vertex attaining the maximum; npos when no intermediate vertex lies above.
  std::size_t vertex = static_cast<std::size_t>(-1);
};

/// Maximum vertical distance between the chord qi-qj and the terrain
/// vertices strictly between them that lie above it; 0 if none.
VertResult vert_with_witness(Point2 qi, Point2 qj, const Terrain& terrain);
double vert(Point2 qi, Point2 qj, const Terrain& terrain);

}  // namespace bifurcate::geom
