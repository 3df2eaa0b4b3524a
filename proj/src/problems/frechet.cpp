#include "bifurcate/problems/frechet.hpp"

#include <algorithm>

#include "bifurcate/error.hpp"
#include "bifurcate/problems/pair_grid.hpp"

namespace bifurcate::problems {

using engine::CriticalEvent;
using engine::Done;
using engine::NeedCompare;
using engine::Step;
using engine::Strictness;

namespace {

// Greedy frontier: j is the smallest B index that can be paired with a_i.
class FrechetMachine final : public engine::CopyableSimulation<FrechetMachine> {
 public:
  explicit FrechetMachine(const FrechetInstance& inst) : inst_(&inst) {}

  Step step() override {
    if (finished_) return Done{accept_};
    const std::size_t n = inst_->a().size(), m = inst_->b().size();
    if (i_ == n) return ask(n - 1, m - 1);
    return ask(i_, j_);
  }

  void answer(bool holds) override {
    const std::size_t n = inst_->a().size(), m = inst_->b().size();
    if (i_ == n) {
      finish(holds);
    } else if (holds) {
      ++i_;
    } else if (i_ == 0 || ++j_ == m) {
      finish(false);
    }
  }

 private:
  NeedCompare ask(std::size_t i, std::size_t j) const {
    return NeedCompare{{CriticalEvent::pair(geom::distance(inst_->a()[i], inst_->b()[j]), i, j), Strictness::AtMost}};
  }

  void finish(bool accept) {
    finished_ = true;
    accept_ = accept;
  }

  const FrechetInstance* inst_;
  std::size_t i_ = 0;
  std::size_t j_ = 0;
  bool finished_ = false;
  bool accept_ = false;
};

}  // namespace

FrechetInstance::FrechetInstance(geom::PointSet a, geom::PointSet b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() == 0 || b_.size() == 0) throw InputError("dfds: both sequences need at least one point");
  if (a_.dim() != b_.dim()) throw InputError("dfds: dimension mismatch between A and B");
  for (std::size_t i = 0; i < a_.size(); ++i) {
    for (std::size_t j = 0; j < b_.size(); ++j) max_distance_ = std::max(max_distance_, geom::distance(a_[i], b_[j]));
  }
}

std::unique_ptr<engine::Simulation> FrechetInstance::simulate() const {
  return std::make_unique<FrechetMachine>(*this);
}

engine::HalfOpenInterval FrechetInstance::initial_interval() const {
  return {-1e-9 * std::max(1.0, max_distance_), max_distance_, engine::Flip::TrueAtStar};
}

std::uint64_t FrechetInstance::decision_budget(const engine::Bracket&) const {
  return a_.size() + b_.size() + 2;
}

std::uint64_t FrechetInstance::tuple_count() const {
  return static_cast<std::uint64_t>(a_.size()) * b_.size();
}

std::vector<CriticalEvent> FrechetInstance::sample_criticals(std::size_t count, engine::Rng& rng) const {
  std::uniform_int_distribution<std::size_t> pi(0, a_.size() - 1), pj(0, b_.size() - 1);
  std::vector<CriticalEvent> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t i = pi(rng), j = pj(rng);
    out.push_back(CriticalEvent::pair(geom::distance(a_[i], b_[j]), i, j));
  }
  return out;
}

std::uint64_t FrechetInstance::count_in_range(double lo, double hi, std::uint64_t cap) const {
  std::uint64_t count = 0;
  if (cap == 0 || lo > hi) return 0;
  for_each_cross_pair_within(a_, b_, hi, [&](std::size_t, std::size_t, double d) {
    if (d >= lo) ++count;
    return count < cap;
  });
  return count;
}

std::vector<CriticalEvent> FrechetInstance::enumerate_in_range(double lo, double hi) const {
  std::vector<CriticalEvent> out;
  if (lo > hi) return out;
  for_each_cross_pair_within(a_, b_, hi, [&](std::size_t i, std::size_t j, double d) {
    if (d >= lo) out.push_back(CriticalEvent::pair(d, i, j));
    return true;
  });
  return out;
}

}  // namespace bifurcate::problems
