#include "bifurcate/oracle/selection.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "bifurcate/oracle/caps.hpp"

namespace bifurcate::oracle {

namespace {

using Real = long double;
using geom::ExpansionMode;

struct Line {
  Real px, py;  // center
  Real dx, dy;  // unit direction
  Real half;
};

Line line_of(const geom::Segment& s) {
  return {s.center().x, s.center().y, s.direction().x, s.direction().y, s.half_length()};
}

// Growth for a segment to reach a point `reach` away from its center.
Real growth(Real reach, Real half, ExpansionMode mode) {
  return mode == ExpansionMode::Additive ? 2 * (reach - half) : reach / half;
}

double segment_value(const geom::Segment& s, const geom::Segment& t, ExpansionMode mode) {
  const Line a = line_of(s), b = line_of(t);
  // Solve a.p + x a.d = b.p + y b.d by Cramer's rule.
  const Real det = -a.dx * b.dy + a.dy * b.dx;
  const Real rx = b.px - a.px, ry = b.py - a.py;
  if (std::fabs(static_cast<double>(det)) <= 1e-12) {
    const Real off = std::fabs(rx * a.dy - ry * a.dx);
    if (off > 1e-12L * std::max<Real>(1, std::hypot(rx, ry))) return INFINITY;
    const Real gap = std::fabs(rx * a.dx + ry * a.dy);
    return static_cast<double>(mode == ExpansionMode::Additive ? gap - a.half - b.half : gap / (a.half + b.half));
  }
  const Real x = (-rx * b.dy + ry * b.dx) / det;
  const Real ix = a.px + x * a.dx, iy = a.py + x * a.dy;
  const Real ra = std::hypot(ix - a.px, iy - a.py);
  const Real rb = std::hypot(ix - b.px, iy - b.py);
  return static_cast<double>(std::max(growth(ra, a.half, mode), growth(rb, b.half, mode)));
}

double disk_value(const geom::Disk& d, const geom::Disk& e, ExpansionMode mode) {
  const Real dx = Real(d.center().x) - e.center().x, dy = Real(d.center().y) - e.center().y;
  const Real gap = std::sqrt(dx * dx + dy * dy);
  const Real sum = Real(d.radius()) + e.radius();
  return static_cast<double>(mode == ExpansionMode::Additive ? (gap - sum) / 2 : gap / sum);
}

// Closed segment intersection through parametric overlap tests.
bool segs_meet(Real ax, Real ay, Real bx, Real by, Real cx, Real cy, Real dx, Real dy) {
  auto side = [](Real px, Real py, Real qx, Real qy, Real rx, Real ry) {
    const Real v = (qx - px) * (ry - py) - (qy - py) * (rx - px);
    return (v > 0) - (v < 0);
  };
  auto within = [](Real p, Real q, Real v) { return std::min(p, q) <= v && v <= std::max(p, q); };
  const int s1 = side(ax, ay, bx, by, cx, cy), s2 = side(ax, ay, bx, by, dx, dy);
  const int s3 = side(cx, cy, dx, dy, ax, ay), s4 = side(cx, cy, dx, dy, bx, by);
  if (s1 * s2 < 0 && s3 * s4 < 0) return true;
  if (s1 == 0 && within(ax, bx, cx) && within(ay, by, cy)) return true;
  if (s2 == 0 && within(ax, bx, dx) && within(ay, by, dy)) return true;
  if (s3 == 0 && within(cx, dx, ax) && within(cy, dy, ay)) return true;
  if (s4 == 0 && within(cx, dx, bx) && within(cy, dy, by)) return true;
  return false;
}

}  // namespace

double selection_critical(const problems::PlanarObjects& objects, ExpansionMode mode, std::size_t i, std::size_t j) {
  if (const auto* disks = std::get_if<std::vector<geom::Disk>>(&objects)) {
    return disk_value((*disks)[i], (*disks)[j], mode);
  }
  const auto& segs = std::get<std::vector<geom::Segment>>(objects);
  return segment_value(segs[i], segs[j], mode);
}

std::vector<double> selection_all_criticals(const problems::PlanarObjects& objects, ExpansionMode mode) {
  const std::size_t n = problems::object_count(objects);
  require_cap(static_cast<std::uint64_t>(n) * (n - 1) / 2, kMaxPairs, "selection pair count");
  std::vector<double> values;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = selection_critical(objects, mode, i, j);
      if (std::isfinite(v)) values.push_back(v);
    }
  }
  std::sort(values.begin(), values.end());
  return values;
}

std::uint64_t selection_brute_count(const problems::PlanarObjects& objects, ExpansionMode mode, double r) {
  const std::size_t n = problems::object_count(objects);
  std::uint64_t count = 0;
  if (const auto* disks = std::get_if<std::vector<geom::Disk>>(&objects)) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto& a = (*disks)[i];
        const auto& b = (*disks)[j];
        const Real ra = mode == ExpansionMode::Additive ? a.radius() + r : a.radius() * r;
        const Real rb = mode == ExpansionMode::Additive ? b.radius() + r : b.radius() * r;
        if (ra < 0 || rb < 0) continue;
        const Real dx = Real(a.center().x) - b.center().x, dy = Real(a.center().y) - b.center().y;
        count += (dx * dx + dy * dy <= (ra + rb) * (ra + rb)) ? 1 : 0;
      }
    }
    return count;
  }
  const auto& segs = std::get<std::vector<geom::Segment>>(objects);
  auto ends = [&](const geom::Segment& s) {
    const Real h = mode == ExpansionMode::Additive ? s.half_length() + Real(r) / 2 : s.half_length() * Real(r);
    const Real hh = std::max<Real>(h, 0);
    return std::array<Real, 4>{s.center().x - hh * s.direction().x, s.center().y - hh * s.direction().y,
                               s.center().x + hh * s.direction().x, s.center().y + hh * s.direction().y};
  };
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = ends(segs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto b = ends(segs[j]);
      count += segs_meet(a[0], a[1], a[2], a[3], b[0], b[1], b[2], b[3]) ? 1 : 0;
    }
  }
  return count;
}

double selection_solve(const problems::SelectionInstance& inst) {
  const auto values = selection_all_criticals(inst.objects(), inst.mode());
  if (values.size() < inst.k()) throw InfeasibleError("selection oracle: fewer than k finite criticals");
  return values[inst.k() - 1];
}

}  // namespace bifurcate::oracle
