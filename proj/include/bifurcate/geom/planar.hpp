#pragma once

#include <optional>
#include <string_view>

namespace bifurcate::geom {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double norm(Point2 a);
double distance(Point2 a, Point2 b);

/// Orientation of c relative to the directed line a->b: >0 left, <0 right.
inline double orient(Point2 a, Point2 b, Point2 c) { return cross(b - a, c - a); }

enum class ExpansionMode { Additive, Multiplicative };

std::string_view to_string(ExpansionMode mode);
ExpansionMode parse_expansion_mode(std::string_view text);  // "add" | "mul"

/// A planar segment stored by its center, unit direction and length.
class Segment {
 public:
  Segment(Point2 center, Point2 direction, double length);
  static Segment from_endpoints(Point2 a, Point2 b);

  Point2 center() const { return center_; }
  Point2 direction() const { return direction_; }
  double length() const { return length_; }
  double half_length() const { return 0.5 * length_; }
  Point2 source() const { return center_ - half_length() * direction_; }
  Point2 target() const { return center_ + half_length() * direction_; }

  /// Segment grown about its center: additive adds r to the total length,
  /// multiplicative scales the length by r.
  Segment expanded(double r, ExpansionMode mode) const;

 private:
  Point2 center_;
  Point2 direction_;
  double length_;
};

class Disk {
 public:
  Disk(Point2 center, double radius);

  Point2 center() const { return center_; }
  double radius() const { return radius_; }
  double expanded_radius(double r, ExpansionMode mode) const {
    return mode == ExpansionMode::Additive ? radius_ + r : radius_ * r;
  }

 private:
  Point2 center_;
  double radius_;
};

/// Closed segment intersection test (touching counts).
bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d);
bool segments_intersect(const Segment& e, const Segment& f);

/// Smallest growth r at which the two expanded disks touch.
double disk_critical(const Disk& d, const Disk& e, ExpansionMode mode);

/// max{r, r'} where r is the growth at which e(r) reaches the supporting
/// line of f and r' symmetrically. Parallel distinct supporting lines never
/// meet: nullopt. Collinear segments use the endpoint gap along the line.
std::optional<double> segment_critical(const Segment& e, const Segment& f, ExpansionMode mode);

/// Direct geometric predicates: do the copies expanded by r intersect?
bool expanded_disks_intersect(const Disk& d, const Disk& e, double r, ExpansionMode mode);
bool expanded_segments_intersect(const Segment& e, const Segment& f, double r, ExpansionMode mode);

}  // namespace bifurcate::geom
