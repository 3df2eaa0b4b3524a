#include "bifurcate/geom/terrain.hpp"

#include <algorithm>
#include <cmath>

#include "bifurcate/error.hpp"

namespace bifurcate::geom {

Terrain::Terrain(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw InputError("terrain needs at least two vertices");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!std::isfinite(vertices_[i].x) || !std::isfinite(vertices_[i].y)) {
      throw InputError("terrain coordinates must be finite");
    }
    if (i > 0 && !(vertices_[i - 1].x < vertices_[i].x)) {
      throw InputError("terrain x-coordinates must be strictly increasing");
    }
  }
}

double Terrain::height_at(double x) const {
  if (x < min_x() || x > max_x()) throw InputError("height_at: x outside terrain");
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x,
                             [](const Point2& p, double v) { return p.x < v; });
  if (it->x == x) return it->y;
  const Point2 b = *it;
  const Point2 a = *(it - 1);
  const double t = (x - a.x) / (b.x - a.x);
  return a.y + t * (b.y - a.y);
}

std::pair<std::size_t, std::size_t> Terrain::strictly_between(double ax, double bx) const {
  auto first = std::upper_bound(vertices_.begin(), vertices_.end(), ax,
                                [](double v, const Point2& p) { return v < p.x; });
  auto last = std::lower_bound(vertices_.begin(), vertices_.end(), bx,
                               [](const Point2& p, double v) { return p.x < v; });
  const auto f = static_cast<std::size_t>(first - vertices_.begin());
  const auto l = static_cast<std::size_t>(last - vertices_.begin());
  return {f, std::max(f, l)};
}

VertResult vert_with_witness(Point2 qi, Point2 qj, const Terrain& terrain) {
  if (!(qi.x < qj.x)) throw InputError("vert: qi must lie strictly left of qj");
  VertResult best;
  const auto [first, last] = terrain.strictly_between(qi.x, qj.x);
  for (std::size_t k = first; k < last; ++k) {
    const double h = height_above_chord(qi, qj, terrain[k]);
    if (h > best.value) {
      best.value = h;
      best.vertex = k;
    }
  }
  return best;
}

double vert(Point2 qi, Point2 qj, const Terrain& terrain) { return vert_with_witness(qi, qj, terrain).value; }

}  // namespace bifurcate::geom
