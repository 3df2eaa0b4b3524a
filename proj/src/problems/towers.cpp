#include "bifurcate/problems/towers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bifurcate/error.hpp"
#include "bifurcate/geom/tolerance.hpp"

namespace bifurcate::problems {

using engine::CriticalEvent;
using engine::Done;
using engine::NeedCompare;
using engine::Step;
using engine::Strictness;
using geom::Point2;

bool decide_visible(const geom::Terrain& terrain, const std::vector<Point2>& bases, double h) {
  if (!(h > 0.0)) throw InputError("towers: height must be positive");
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      const auto [first, last] = terrain.strictly_between(bases[i].x, bases[j].x);
      bool blocked = false;
      for (std::size_t k = first; k < last && !blocked; ++k) {
        blocked = geom::height_above_chord(bases[i], bases[j], terrain[k]) >= h;
      }
      if (!blocked) return true;
    }
  }
  return false;
}

namespace {

std::vector<Point2> bases_from_indices(const geom::Terrain& terrain, const std::vector<std::size_t>& ids) {
  std::vector<Point2> out;
  for (std::size_t id : ids) {
    if (id >= terrain.size()) throw InputError("towers: base index " + std::to_string(id) + " out of range");
    out.push_back(terrain[id]);
  }
  return out;
}

std::string pair_name(std::size_t i, std::size_t j) {
  return "(q" + std::to_string(i) + ", q" + std::to_string(j) + ")";
}

// Asks, pair by pair, whether the pair's potential is below h; the first
// visible pair accepts.
class TowersMachine final : public engine::CopyableSimulation<TowersMachine> {
 public:
  explicit TowersMachine(const TowersInstance& inst) : inst_(&inst) {}

  Step step() override {
    if (finished_) return Done{accept_};
    return NeedCompare{{event_, Strictness::Below}};
  }

  void answer(bool holds) override {
    if (holds) {
      finished_ = accept_ = true;
      return;
    }
    if (++j_ == inst_->bases().size()) {
      ++i_;
      j_ = i_ + 1;
    }
    if (j_ >= inst_->bases().size()) {
      finished_ = true;
      return;
    }
    load();
  }

  void load() {
    const auto p = inst_->potential(i_, j_);
    event_ = CriticalEvent::triple(p.value, i_, j_, p.vertex);
  }

 private:
  const TowersInstance* inst_;
  std::size_t i_ = 0;
  std::size_t j_ = 1;
  CriticalEvent event_{};
  bool finished_ = false;
  bool accept_ = false;
};

}  // namespace

TowersInstance::TowersInstance(geom::Terrain terrain, const std::vector<std::size_t>& base_vertices)
    : TowersInstance(terrain, bases_from_indices(terrain, base_vertices)) {}

TowersInstance::TowersInstance(geom::Terrain terrain, std::vector<Point2> bases)
    : terrain_(std::move(terrain)), bases_(std::move(bases)), hulls_(terrain_.vertices()) {
  const std::size_t m = bases_.size();
  if (m < 2) throw InputError("towers: need at least two base points");
  double scale = 1.0;
  for (const auto& p : terrain_.vertices()) scale = std::max({scale, std::fabs(p.x), std::fabs(p.y)});
  for (std::size_t i = 0; i < m; ++i) {
    const Point2 q = bases_[i];
    if (!(q.x >= terrain_.min_x() && q.x <= terrain_.max_x())) {
      throw InputError("towers: base q" + std::to_string(i) + " lies outside the terrain's x-range");
    }
    if (std::fabs(terrain_.height_at(q.x) - q.y) > 1e-9 * scale) {
      throw InputError("towers: base q" + std::to_string(i) + " is not on the terrain");
    }
    if (i > 0) {
      if (!(bases_[i - 1].x < q.x)) throw InputError("towers: bases must be sorted by strictly increasing x");
      const auto [first, last] = terrain_.strictly_between(bases_[i - 1].x, q.x);
      if (first == last) {
        throw DegenerateError("towers: no terrain vertex between consecutive bases " + pair_name(i - 1, i));
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!(potential(i, j).value > 0.0)) {
        throw DegenerateError("towers: pair " + pair_name(i, j) + " sees each other at every positive height");
      }
    }
  }
  beta_ = INFINITY;
  for (std::size_t i = 0; i + 1 < m; ++i) beta_ = std::min(beta_, potential(i, i + 1).value);
  beta_ = geom::next_up(beta_);
}

geom::VertResult TowersInstance::potential(std::size_t i, std::size_t j) const {
  return geom::vert_with_witness(bases_[i], bases_[j], terrain_);
}

bool TowersInstance::potential_in_interval(std::size_t i, std::size_t j, double h1, double h2) const {
  if (!(i < j && j < bases_.size())) throw InputError("towers: pair indices must satisfy i < j < m");
  if (!(h1 >= 0.0 && h1 < h2)) throw InputError("towers: interval must satisfy 0 <= h1 < h2");
  const Point2 qi = bases_[i], qj = bases_[j];
  const auto [first, last] = terrain_.strictly_between(qi.x, qj.x);
  if (first == last) throw DegenerateError("towers: pair " + pair_name(i, j) + " has no intermediate vertex");
  const std::size_t mid = first + (last - 1 - first) / 2;
  // Topmost vertices seen from the raised endpoints on each side of the split.
  auto above = [&](double h) {
    const auto left = hulls_.tangent(first, mid, {qi.x, qi.y + h}, geom::TangentSide::Left);
    const auto right = hulls_.tangent(mid, last - 1, {qj.x, qj.y + h}, geom::TangentSide::Right);
    return std::max(geom::height_above_chord(qi, qj, terrain_[left.vertex]),
                    geom::height_above_chord(qi, qj, terrain_[right.vertex]));
  };
  return above(h1) > h1 && (h2 == INFINITY || above(h2) <= h2);
}

CriticalEvent TowersInstance::event(std::size_t i, std::size_t j) const {
  const auto p = potential(i, j);
  return CriticalEvent::triple(p.value, i, j, p.vertex);
}

bool TowersInstance::decide(double h) const {
  if (!(h > 0.0)) throw InputError("towers: height must be positive");
  return ProblemInstance::decide(h);
}

std::unique_ptr<engine::Simulation> TowersInstance::simulate() const {
  auto sim = std::make_unique<TowersMachine>(*this);
  sim->load();
  return sim;
}

engine::HalfOpenInterval TowersInstance::initial_interval() const {
  return {std::numeric_limits<double>::denorm_min(), beta_, engine::Flip::FalseAtStar};
}

std::uint64_t TowersInstance::decision_budget(const engine::Bracket&) const { return tuple_count(); }

std::uint64_t TowersInstance::tuple_count() const {
  const std::uint64_t m = bases_.size();
  return m * (m - 1) / 2;
}

std::vector<CriticalEvent> TowersInstance::sample_criticals(std::size_t count, engine::Rng& rng) const {
  std::uniform_int_distribution<std::size_t> pick(0, bases_.size() - 1);
  std::vector<CriticalEvent> out;
  out.reserve(count);
  while (out.size() < count) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    out.push_back(event(i, j));
  }
  return out;
}

std::uint64_t TowersInstance::count_in_range(double lo, double hi, std::uint64_t cap) const {
  std::uint64_t count = 0;
  if (cap == 0 || lo > hi) return 0;
  // Potentials are positive, so a lower end at or below zero excludes nothing.
  const double h1 = std::max(0.0, geom::next_down(lo));
  if (hi <= h1) return 0;
  for (std::size_t i = 0; i < bases_.size() && count < cap; ++i) {
    for (std::size_t j = i + 1; j < bases_.size() && count < cap; ++j) {
      if (potential_in_interval(i, j, h1, hi)) ++count;
    }
  }
  return count;
}

std::vector<CriticalEvent> TowersInstance::enumerate_in_range(double lo, double hi) const {
  std::vector<CriticalEvent> out;
  for (std::size_t i = 0; i < bases_.size(); ++i) {
    for (std::size_t j = i + 1; j < bases_.size(); ++j) {
      const auto e = event(i, j);
      if (e.value >= lo && e.value <= hi) out.push_back(e);
    }
  }
  return out;
}

}  // namespace bifurcate::problems
