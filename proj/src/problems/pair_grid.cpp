#include "bifurcate/problems/pair_grid.hpp"

#include <numeric>

#include "bifurcate/error.hpp"

namespace bifurcate::problems {

CellGrid::CellGrid(const geom::PointSet& points, double cell, std::span<const double> origin)
    : dim_(points.dim()), cell_(cell), origin_(origin.begin(), origin.end()) {
  if (dim_ > kMaxDim) throw InputError("cell grid supports at most three dimensions");
  if (!(cell_ > 0.0)) throw InputError("cell grid needs a positive cell size");
  const std::size_t n = points.size();
  std::vector<std::uint64_t> keys(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t cellc[kMaxDim] = {0, 0, 0};
    for (std::size_t c = 0; c < dim_; ++c) cellc[c] = coord(points[i][c], c);
    keys[i] = pack(cellc);
  }
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0u);
  std::sort(order_.begin(), order_.end(), [&](std::uint32_t a, std::uint32_t b) {
    return keys[a] != keys[b] ? keys[a] < keys[b] : a < b;
  });
  buckets_.reserve(n);
  for (std::uint32_t k = 0; k < n;) {
    std::uint32_t e = k;
    while (e < n && keys[order_[e]] == keys[order_[k]]) ++e;
    buckets_.emplace(keys[order_[k]], std::make_pair(k, e));
    k = e;
  }
}

namespace detail {

Box bounding_box(std::initializer_list<const geom::PointSet*> sets) {
  Box box;
  for (const auto* s : sets) {
    for (std::size_t i = 0; i < s->size(); ++i) {
      if (box.lo.empty()) {
        box.lo.assign((*s)[i].begin(), (*s)[i].end());
        box.hi = box.lo;
      }
      for (std::size_t c = 0; c < s->dim(); ++c) {
        box.lo[c] = std::min(box.lo[c], (*s)[i][c]);
        box.hi[c] = std::max(box.hi[c], (*s)[i][c]);
      }
    }
  }
  return box;
}

}  // namespace detail

std::uint64_t count_chebyshev_pairs(const geom::PointSet& pts, double box) {
  const std::size_t n = pts.size();
  const std::size_t dim = pts.dim();
  auto close = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < dim; ++c) {
      if (std::fabs(pts[i][c] - pts[j][c]) > box) return false;
    }
    return true;
  };
  std::uint64_t count = 0;
  const detail::Box bb = detail::bounding_box({&pts});
  if (!detail::use_grid(dim, box, bb.extent())) {
    if (!(box < bb.extent())) return static_cast<std::uint64_t>(n) * (n - 1) / 2;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) count += close(i, j) ? 1 : 0;
    return count;
  }
  const CellGrid grid(pts, std::max(box, bb.extent() / 1024.0), bb.lo);
  for (std::size_t i = 0; i < n; ++i) {
    grid.for_each_near(pts[i], 1, [&](std::uint32_t j) {
      if (j > i && close(i, j)) ++count;
      return true;
    });
  }
  return count;
}

}  // namespace bifurcate::problems
