#include "bifurcate/problems/window_scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

namespace bifurcate::problems {

WindowOrder::WindowOrder(const std::vector<XExtent>& extents) : order_(extents.size()) {
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::stable_sort(order_.begin(), order_.end(),
                   [&](std::size_t a, std::size_t b) { return extents[a].x < extents[b].x; });
  for (std::size_t id : order_) {
    sorted_.push_back(extents[id]);
    e_max_ = std::max(e_max_, extents[id].e);
    g_max_ = std::max(g_max_, extents[id].g);
    scale_ = std::max(scale_, std::fabs(extents[id].x));
  }
  scale_ += e_max_;
}

double WindowOrder::window(std::size_t a, std::size_t b) const {
  const double gap = sorted_[b].x - sorted_[a].x;
  const double reach = sorted_[a].e + e_max_;
  const double growth = sorted_[a].g + g_max_;
  if (growth <= 0.0) return gap <= reach * (1.0 + 1e-9) + 1e-12 * scale_ ? -INFINITY : INFINITY;
  const double v = (gap - reach) / growth;
  // Pulled down so rounding can never drop a pair that truly overlaps.
  return v - 1e-9 * std::max({1.0, std::fabs(v), scale_ / growth});
}

std::uint64_t WindowOrder::count_open(double r) const {
  std::uint64_t count = 0;
  for_each_open(r, [&](std::size_t, std::size_t) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace bifurcate::problems
