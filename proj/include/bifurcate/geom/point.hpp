#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace bifurcate::geom {

/// A point in R^d, d >= 2.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

/// Euclidean distance. Throws InputError on dimension mismatch.
double distance(const Point& p, const Point& q);

/// Unchecked kernel shared by every decider, sampler and counter so that
/// a given pair always produces bit-identical critical values.
inline double distance(std::span<const double> p, std::span<const double> q) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = p[i] - q[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

/// Contiguous storage for n points of a fixed dimension.
class PointSet {
 public:
  PointSet() = default;
  PointSet(std::size_t dim, std::vector<double> flat);
  explicit PointSet(const std::vector<Point>& points);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : flat_.size() / dim_; }
  std::span<const double> operator[](std::size_t i) const {
    return {flat_.data() + i * dim_, dim_};
  }
  Point point(std::size_t i) const;
  double distance(std::size_t i, std::size_t j) const {
    return geom::distance((*this)[i], (*this)[j]);
  }

 private:
  std::size_t dim_ = 0;
  std::vector<double> flat_;
};

}  // namespace bifurcate::geom
