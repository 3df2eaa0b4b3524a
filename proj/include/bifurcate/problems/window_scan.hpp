#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bifurcate::problems {

/// Horizontal reach of an expanded object: its x half-extent is e + g*r.
struct XExtent {
  double x = 0.0;
  double e = 0.0;
  double g = 0.0;
};

/// Objects sorted by center x. For sorted positions a < b, window(a, b) is
/// a value v such that the x-ranges of the expanded objects at r can only
/// overlap when v <= r; it is increasing in b for fixed a. A value of
/// -inf means always, +inf never.
class WindowOrder {
 public:
  explicit WindowOrder(const std::vector<XExtent>& extents);

  std::size_t size() const { return order_.size(); }
  /// Original index of the object at sorted position a.
  std::size_t id(std::size_t a) const { return order_[a]; }
  double window(std::size_t a, std::size_t b) const;
  /// Number of sorted pairs whose window value is at most r.
  std::uint64_t count_open(double r) const;

  /// Visits original index pairs (i < j) whose window is at most r.
  template <class Fn>
  void for_each_open(double r, Fn&& fn) const {
    for (std::size_t a = 0; a < order_.size(); ++a) {
      for (std::size_t b = a + 1; b < order_.size() && window(a, b) <= r; ++b) {
        const std::size_t i = order_[a], j = order_[b];
        if (!fn(i < j ? i : j, i < j ? j : i)) return;
      }
    }
  }

 private:
  std::vector<std::size_t> order_;
  std::vector<XExtent> sorted_;
  double e_max_ = 0.0;
  double g_max_ = 0.0;
  double scale_ = 0.0;
};

}  // namespace bifurcate::problems
