#include "bifurcate/geom/planar.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bifurcate/error.hpp"

namespace bifurcate::geom {

double norm(Point2 a) { return std::hypot(a.x, a.y); }
double distance(Point2 a, Point2 b) { return norm(b - a); }

std::string_view to_string(ExpansionMode mode) {
  return mode == ExpansionMode::Additive ? "add" : "mul";
}

ExpansionMode parse_expansion_mode(std::string_view text) {
  if (text == "add" || text == "additive") return ExpansionMode::Additive;
  if (text == "mul" || text == "multiplicative") return ExpansionMode::Multiplicative;
  throw InputError("unknown expansion mode '" + std::string(text) + "' (expected add|mul)");
}

Segment::Segment(Point2 center, Point2 direction, double length)
    : center_(center), direction_(direction), length_(length) {
  if (!(length_ > 0.0) || !std::isfinite(length_)) throw InputError("segment length must be positive");
  if (std::fabs(norm(direction_) - 1.0) > 1e-12) throw InputError("segment direction must be a unit vector");
}

Segment Segment::from_endpoints(Point2 a, Point2 b) {
  const Point2 d = b - a;
  const double len = norm(d);
  if (!(len > 0.0)) throw InputError("degenerate (zero-length) segment");
  return Segment(0.5 * (a + b), (1.0 / len) * d, len);
}

Segment Segment::expanded(double r, ExpansionMode mode) const {
  const double len = mode == ExpansionMode::Additive ? length_ + r : length_ * r;
  Segment out = *this;
  out.length_ = std::max(len, 0.0);
  return out;
}

Disk::Disk(Point2 center, double radius) : center_(center), radius_(radius) {
  if (!(radius_ > 0.0) || !std::isfinite(radius_)) throw InputError("disk radius must be positive");
}

namespace {

bool on_segment(Point2 a, Point2 b, Point2 p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
  const int o1 = sign(orient(a, b, c));
  const int o2 = sign(orient(a, b, d));
  const int o3 = sign(orient(c, d, a));
  const int o4 = sign(orient(c, d, b));
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

bool segments_intersect(const Segment& e, const Segment& f) {
  return segments_intersect(e.source(), e.target(), f.source(), f.target());
}

double disk_critical(const Disk& d, const Disk& e, ExpansionMode mode) {
  const double gap = distance(d.center(), e.center());
  const double rsum = d.radius() + e.radius();
  if (mode == ExpansionMode::Multiplicative) {
    if (!(rsum > 0.0)) throw InputError("disk_critical: zero sum of radii in multiplicative mode");
    return gap / rsum;
  }
  return 0.5 * (gap - rsum);
}

namespace {

/// Growth needed for a segment of half-length h to reach a point at
/// distance reach from its center along its own line.
double growth_to_reach(double reach, double half, ExpansionMode mode) {
  return mode == ExpansionMode::Additive ? 2.0 * (reach - half) : reach / half;
}

}  // namespace

std::optional<double> segment_critical(const Segment& e, const Segment& f, ExpansionMode mode) {
  const Point2 u = e.direction();
  const Point2 v = f.direction();
  const Point2 w = f.center() - e.center();
  const double denom = cross(u, v);
  if (std::fabs(denom) <= 1e-12) {
    const double offset = std::fabs(cross(w, u));
    if (offset > 1e-12 * std::max(1.0, norm(w))) return std::nullopt;
    // Collinear: the two segments grow toward each other along one line.
    const double gap = std::fabs(dot(w, u));
    const double halves = e.half_length() + f.half_length();
    return mode == ExpansionMode::Additive ? gap - halves : gap / halves;
  }
  // e.center + t u == f.center + s v
  const double t = cross(w, v) / denom;
  const double s = cross(w, u) / denom;
  const double re = growth_to_reach(std::fabs(t), e.half_length(), mode);
  const double rf = growth_to_reach(std::fabs(s), f.half_length(), mode);
  return std::max(re, rf);
}

bool expanded_disks_intersect(const Disk& d, const Disk& e, double r, ExpansionMode mode) {
  const double ra = d.expanded_radius(r, mode);
  const double rb = e.expanded_radius(r, mode);
  if (ra < 0.0 || rb < 0.0) return false;
  return distance(d.center(), e.center()) <= ra + rb;
}

bool expanded_segments_intersect(const Segment& e, const Segment& f, double r, ExpansionMode mode) {
  return segments_intersect(e.expanded(r, mode), f.expanded(r, mode));
}

}  // namespace bifurcate::geom
