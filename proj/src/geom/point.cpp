#include "bifurcate/geom/point.hpp"

#include <cmath>
#include <string>

#include "bifurcate/error.hpp"

namespace bifurcate::geom {

namespace {

void check_coords(std::span<const double> coords) {
  if (coords.size() < 2) throw InputError("point dimension must be at least 2");
  for (double c : coords) {
    if (!std::isfinite(c)) throw InputError("point coordinates must be finite");
  }
}

}  // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) { check_coords(coords_); }

Point::Point(std::initializer_list<double> coords) : coords_(coords) { check_coords(coords_); }

double distance(const Point& p, const Point& q) {
  if (p.dim() != q.dim()) {
    throw InputError("distance: dimension mismatch (" + std::to_string(p.dim()) + " vs " +
                     std::to_string(q.dim()) + ")");
  }
  return distance(p.coords(), q.coords());
}

PointSet::PointSet(std::size_t dim, std::vector<double> flat) : dim_(dim), flat_(std::move(flat)) {
  if (dim_ < 2) throw InputError("point dimension must be at least 2");
  if (flat_.size() % dim_ != 0) throw InputError("flat coordinate array is not a multiple of dim");
  for (double c : flat_) {
    if (!std::isfinite(c)) throw InputError("point coordinates must be finite");
  }
}

PointSet::PointSet(const std::vector<Point>& points) {
  if (points.empty()) return;
  dim_ = points.front().dim();
  flat_.reserve(points.size() * dim_);
  for (const Point& p : points) {
    if (p.dim() != dim_) throw InputError("point set mixes dimensions");
    flat_.insert(flat_.end(), p.coords().begin(), p.coords().end());
  }
}

Point PointSet::point(std::size_t i) const {
  auto c = (*this)[i];
  return Point(std::vector<double>(c.begin(), c.end()));
}

}  // namespace bifurcate::geom
