#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bifurcate/geom/point.hpp"

namespace bifurcate::problems {

/// Hash grid for near-pair queries in 2D/3D. Cells are cubes of a fixed
/// side; a query visits the cells within `reach` of the query's cell.
class CellGrid {
 public:
  static constexpr std::size_t kMaxDim = 3;

  CellGrid(const geom::PointSet& points, double cell, std::span<const double> origin);

  double cell() const { return cell_; }

  template <class Fn>
  void for_each_near(std::span<const double> q, int reach, Fn&& fn) const {
    std::int64_t base[kMaxDim] = {0, 0, 0};
    for (std::size_t c = 0; c < dim_; ++c) base[c] = coord(q[c], c);
    std::int64_t off[kMaxDim] = {0, 0, 0};
    const std::size_t total = ipow(2 * reach + 1, dim_);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t rest = code;
      for (std::size_t c = 0; c < dim_; ++c) {
        off[c] = static_cast<std::int64_t>(rest % (2 * reach + 1)) - reach;
        rest /= 2 * reach + 1;
      }
      std::int64_t cellc[kMaxDim];
      for (std::size_t c = 0; c < dim_; ++c) cellc[c] = base[c] + off[c];
      auto it = buckets_.find(pack(cellc));
      if (it == buckets_.end()) continue;
      for (std::uint32_t k = it->second.first; k < it->second.second; ++k) {
        if (!fn(order_[k])) return;
      }
    }
  }

 private:
  static std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
  }
  std::int64_t coord(double x, std::size_t c) const {
    return static_cast<std::int64_t>(std::floor((x - origin_[c]) / cell_));
  }
  std::uint64_t pack(const std::int64_t* cellc) const {
    std::uint64_t key = 0;
    for (std::size_t c = 0; c < dim_; ++c) {
      key |= (static_cast<std::uint64_t>(cellc[c] + (std::int64_t{1} << 20)) & 0x1FFFFF) << (21 * c);
    }
    return key;
  }

  std::size_t dim_;
  double cell_;
  std::vector<double> origin_;
  std::vector<std::uint32_t> order_;
  std::unordered_map<std::uint64_t, std::pair<std::uint32_t, std::uint32_t>> buckets_;
};

namespace detail {

struct Box {
  std::vector<double> lo, hi;
  double extent() const {
    double e = 0.0;
    for (std::size_t c = 0; c < lo.size(); ++c) e = std::max(e, hi[c] - lo[c]);
    return e;
  }
};

Box bounding_box(std::initializer_list<const geom::PointSet*> sets);

// Grid cells no smaller than 1/1024 of the extent keep the cell
// coordinates inside the packed key range.
inline bool use_grid(std::size_t dim, double radius, double extent) {
  return dim <= CellGrid::kMaxDim && std::isfinite(radius) && radius < extent;
}

}  // namespace detail

/// Visits unordered pairs i < j with distance(i, j) <= radius, as
/// fn(i, j, dist) -> bool; returning false stops the scan.
template <class Fn>
void for_each_pair_within(const geom::PointSet& pts, double radius, Fn&& fn) {
  const std::size_t n = pts.size();
  if (n < 2 || radius < 0.0) return;
  const detail::Box box = detail::bounding_box({&pts});
  if (!detail::use_grid(pts.dim(), radius, box.extent())) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double d = pts.distance(i, j);
        if (d <= radius && !fn(i, j, d)) return;
      }
    }
    return;
  }
  const CellGrid grid(pts, std::max(radius, box.extent() / 1024.0), box.lo);
  bool go = true;
  for (std::size_t i = 0; i < n && go; ++i) {
    grid.for_each_near(pts[i], 1, [&](std::uint32_t j) {
      if (j <= i) return true;
      const double d = pts.distance(i, j);
      if (d <= radius && !fn(i, static_cast<std::size_t>(j), d)) go = false;
      return go;
    });
  }
}

/// Bichromatic version: pairs (i in a, j in b) with distance <= radius.
template <class Fn>
void for_each_cross_pair_within(const geom::PointSet& a, const geom::PointSet& b, double radius, Fn&& fn) {
  if (a.size() == 0 || b.size() == 0 || radius < 0.0) return;
  const detail::Box box = detail::bounding_box({&a, &b});
  if (!detail::use_grid(a.dim(), radius, box.extent())) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        const double d = geom::distance(a[i], b[j]);
        if (d <= radius && !fn(i, j, d)) return;
      }
    }
    return;
  }
  const CellGrid grid(b, std::max(radius, box.extent() / 1024.0), box.lo);
  bool go = true;
  for (std::size_t i = 0; i < a.size() && go; ++i) {
    grid.for_each_near(a[i], 1, [&](std::uint32_t j) {
      const double d = geom::distance(a[i], b[j]);
      if (d <= radius && !fn(i, static_cast<std::size_t>(j), d)) go = false;
      return go;
    });
  }
}

/// Pairs whose coordinates differ by at most `box` in every axis.
std::uint64_t count_chebyshev_pairs(const geom::PointSet& pts, double box);

}  // namespace bifurcate::problems
