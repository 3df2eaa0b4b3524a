#include "bifurcate/problems/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "bifurcate/error.hpp"

namespace bifurcate::problems {

using engine::CriticalEvent;
using engine::Done;
using engine::NeedCompare;
using engine::Step;
using engine::Strictness;
using geom::ExpansionMode;

std::size_t object_count(const PlanarObjects& objects) {
  return std::visit([](const auto& v) { return v.size(); }, objects);
}

double pair_critical(const PlanarObjects& objects, ExpansionMode mode, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  if (const auto* disks = std::get_if<std::vector<geom::Disk>>(&objects)) {
    return geom::disk_critical((*disks)[i], (*disks)[j], mode);
  }
  const auto& segs = std::get<std::vector<geom::Segment>>(objects);
  return geom::segment_critical(segs[i], segs[j], mode).value_or(INFINITY);
}

std::vector<XExtent> x_extents(const PlanarObjects& objects, ExpansionMode mode) {
  std::vector<XExtent> out;
  const bool add = mode == ExpansionMode::Additive;
  if (const auto* disks = std::get_if<std::vector<geom::Disk>>(&objects)) {
    for (const auto& d : *disks) {
      out.push_back(add ? XExtent{d.center().x, d.radius(), 1.0} : XExtent{d.center().x, 0.0, d.radius()});
    }
    return out;
  }
  for (const auto& s : std::get<std::vector<geom::Segment>>(objects)) {
    const double ux = std::fabs(s.direction().x);
    out.push_back(add ? XExtent{s.center().x, s.half_length() * ux, 0.5 * ux}
                      : XExtent{s.center().x, 0.0, s.half_length() * ux});
  }
  return out;
}

std::uint64_t count_intersecting_pairs(const PlanarObjects& objects, ExpansionMode mode, double r,
                                       std::uint64_t cap) {
  struct Range {
    double left, right;
    std::size_t id;
  };
  std::vector<Range> ranges;
  const auto extents = x_extents(objects, mode);
  for (std::size_t i = 0; i < extents.size(); ++i) {
    const double half = extents[i].e + extents[i].g * r;
    if (half < 0.0) continue;
    const double pad = 1e-9 * (half + std::fabs(extents[i].x)) + 1e-300;
    ranges.push_back({extents[i].x - half - pad, extents[i].x + half + pad, i});
  }
  std::sort(ranges.begin(), ranges.end(), [](const Range& a, const Range& b) { return a.left < b.left; });
  const auto* disks = std::get_if<std::vector<geom::Disk>>(&objects);
  const auto* segs = std::get_if<std::vector<geom::Segment>>(&objects);
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < ranges.size() && count < cap; ++a) {
    for (std::size_t b = a + 1; b < ranges.size() && ranges[b].left <= ranges[a].right; ++b) {
      const std::size_t i = ranges[a].id, j = ranges[b].id;
      const bool hit = disks ? geom::expanded_disks_intersect((*disks)[i], (*disks)[j], r, mode)
                             : geom::expanded_segments_intersect((*segs)[i], (*segs)[j], r, mode);
      if (hit && ++count >= cap) break;
    }
  }
  return count;
}

namespace {

// Walks sorted pairs through their x-windows and counts pairs whose
// critical value is at most r, accepting at the k-th.
class SelectionMachine final : public engine::CopyableSimulation<SelectionMachine> {
 public:
  explicit SelectionMachine(const SelectionInstance& inst) : inst_(&inst) {}

  Step step() override {
    const WindowOrder& w = inst_->windows();
    for (;;) {
      if (finished_) return Done{accept_};
      if (a_ + 1 >= w.size()) {
        finished_ = true;
        continue;
      }
      if (b_ >= w.size()) {
        next_row();
        continue;
      }
      if (!in_window_) {
        const double v = w.window(a_, b_);
        if (v == -INFINITY) {
          in_window_ = true;
        } else if (v == INFINITY) {
          next_row();
        } else {
          return NeedCompare{{CriticalEvent::non_pair(v), Strictness::AtMost}};
        }
        continue;
      }
      const std::size_t i = std::min(w.id(a_), w.id(b_)), j = std::max(w.id(a_), w.id(b_));
      const double c = inst_->critical(i, j);
      if (c == INFINITY) {
        next_column();
        continue;
      }
      return NeedCompare{{CriticalEvent::pair(c, i, j), Strictness::AtMost}};
    }
  }

  void answer(bool holds) override {
    if (!in_window_) {
      if (holds) in_window_ = true; else next_row();
      return;
    }
    if (holds && ++count_ >= inst_->k()) {
      finished_ = true;
      accept_ = true;
    }
    next_column();
  }

 private:
  void next_row() {
    ++a_;
    b_ = a_ + 1;
    in_window_ = false;
  }

  void next_column() {
    ++b_;
    in_window_ = false;
  }

  const SelectionInstance* inst_;
  std::size_t a_ = 0;
  std::size_t b_ = 1;
  bool in_window_ = false;
  std::uint64_t count_ = 0;
  bool finished_ = false;
  bool accept_ = false;
};

void require_disjoint(const PlanarObjects& objects) {
  // Expanding additively by 0 leaves the objects as given.
  if (count_intersecting_pairs(objects, ExpansionMode::Additive, 0.0, 1) != 0) {
    throw InputError("selection: objects must be pairwise disjoint");
  }
}

}  // namespace

SelectionInstance::SelectionInstance(PlanarObjects objects, ExpansionMode mode, std::uint64_t k)
    : objects_(std::move(objects)), mode_(mode), k_(k), windows_(x_extents(objects_, mode_)) {
  const std::uint64_t n = problems::object_count(objects_);
  if (n < 2) throw InputError("selection: need at least two objects");
  if (k_ < 1 || k_ > n * (n - 1) / 2) throw InputError("selection: k must lie in [1, C(n,2)]");
  require_disjoint(objects_);
  if (std::holds_alternative<std::vector<geom::Segment>>(objects_)) {
    std::uint64_t finite = 0;
    for (std::size_t i = 0; i < n && finite < k_; ++i) {
      for (std::size_t j = i + 1; j < n && finite < k_; ++j) finite += std::isfinite(critical(i, j)) ? 1 : 0;
    }
    if (finite < k_) {
      throw InfeasibleError("selection: only " + std::to_string(finite) + " pairs ever intersect, fewer than k = " +
                            std::to_string(k_));
    }
  }
  engine::Rng rng(0x5E1EC7ull);
  beta_ = mode_ == ExpansionMode::Additive ? 1.0 : 2.0;
  for (const auto& e : sample_criticals(64, rng)) {
    if (std::isfinite(e.value)) beta_ = std::max(beta_, e.value);
  }
  for (int doubling = 0; !decide(beta_); ++doubling) {
    if (doubling > 2000) throw InternalError("selection: could not find an upper bound");
    beta_ *= 2.0;
  }
}

std::unique_ptr<engine::Simulation> SelectionInstance::simulate() const {
  return std::make_unique<SelectionMachine>(*this);
}

engine::HalfOpenInterval SelectionInstance::initial_interval() const {
  const double alpha = mode_ == ExpansionMode::Additive ? 0.0 : 1.0 - 1e-9;
  return {alpha, beta_, engine::Flip::TrueAtStar};
}

std::uint64_t SelectionInstance::decision_budget(const engine::Bracket& bracket) const {
  return windows_.size() + 2 * windows_.count_open(bracket.hi) + 2;
}

std::uint64_t SelectionInstance::tuple_count() const {
  const std::uint64_t n = windows_.size();
  return n * (n - 1) / 2;
}

std::vector<CriticalEvent> SelectionInstance::sample_criticals(std::size_t count, engine::Rng& rng) const {
  std::uniform_int_distribution<std::size_t> pick(0, windows_.size() - 1);
  std::vector<CriticalEvent> out;
  out.reserve(count);
  while (out.size() < count) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    out.push_back(CriticalEvent::pair(critical(i, j), i, j));
  }
  return out;
}

std::uint64_t SelectionInstance::count_in_range(double lo, double hi, std::uint64_t cap) const {
  std::uint64_t count = 0;
  if (cap == 0 || lo > hi) return 0;
  windows_.for_each_open(hi, [&](std::size_t i, std::size_t j) {
    const double c = critical(i, j);
    if (c >= lo && c <= hi && std::isfinite(c)) ++count;
    return count < cap;
  });
  return count;
}

std::vector<CriticalEvent> SelectionInstance::enumerate_in_range(double lo, double hi) const {
  std::vector<CriticalEvent> out;
  if (lo > hi) return out;
  windows_.for_each_open(hi, [&](std::size_t i, std::size_t j) {
    const double c = critical(i, j);
    if (c >= lo && c <= hi && std::isfinite(c)) out.push_back(CriticalEvent::pair(c, i, j));
    return true;
  });
  return out;
}

}  // namespace bifurcate::problems
