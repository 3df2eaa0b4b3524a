#include "bifurcate/problems/matching.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>
#include <cmath>

#include "bifurcate/error.hpp"
#include "bifurcate/problems/selection.hpp"

namespace bifurcate::problems {

using engine::CriticalEvent;
using engine::Done;
using engine::NeedCompare;
using engine::Step;
using engine::Strictness;

std::size_t maximum_matching_size(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph g(n);
  for (const auto& [u, v] : edges) boost::add_edge(u, v, g);
  std::vector<boost::graph_traits<Graph>::vertex_descriptor> mate(n);
  boost::edmonds_maximum_cardinality_matching(g, &mate[0]);
  return boost::matching_size(g, &mate[0]);
}

namespace {

// Collects every edge of G(r) through the x-window scan, then matches.
class MatchingMachine final : public engine::CopyableSimulation<MatchingMachine> {
 public:
  explicit MatchingMachine(const MatchingInstance& inst) : inst_(&inst) {}

  Step step() override {
    const WindowOrder& w = inst_->windows();
    for (;;) {
      if (finished_) return Done{accept_};
      if (a_ + 1 >= w.size()) {
        const std::size_t n = inst_->disks().size();
        accept_ = 2 * maximum_matching_size(n, edges_) == n;
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
      return NeedCompare{{CriticalEvent::pair(inst_->critical(i, j), i, j), Strictness::AtMost}};
    }
  }

  void answer(bool holds) override {
    if (!in_window_) {
      if (holds) in_window_ = true; else next_row();
      return;
    }
    if (holds) {
      const std::size_t i = inst_->windows().id(a_), j = inst_->windows().id(b_);
      edges_.emplace_back(i, j);
    }
    ++b_;
    in_window_ = false;
  }

 private:
  void next_row() {
    ++a_;
    b_ = a_ + 1;
    in_window_ = false;
  }

  const MatchingInstance* inst_;
  std::size_t a_ = 0;
  std::size_t b_ = 1;
  bool in_window_ = false;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  bool finished_ = false;
  bool accept_ = false;
};

}  // namespace

MatchingInstance::MatchingInstance(std::vector<geom::Disk> disks, geom::ExpansionMode mode)
    : disks_(std::move(disks)), mode_(mode), windows_(x_extents(PlanarObjects(disks_), mode_)) {
  const std::size_t n = disks_.size();
  if (n < 2) throw InputError("matching: need at least two disks");
  if (n % 2 != 0) throw InputError("matching: disk count must be even, got " + std::to_string(n));
  min_critical_ = INFINITY;
  max_critical_ = -INFINITY;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      min_critical_ = std::min(min_critical_, critical(i, j));
      max_critical_ = std::max(max_critical_, critical(i, j));
    }
  }
  degenerate_ = decide(0.0);
}

double MatchingInstance::critical(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  return geom::disk_critical(disks_[i], disks_[j], mode_);
}

std::unique_ptr<engine::Simulation> MatchingInstance::simulate() const {
  return std::make_unique<MatchingMachine>(*this);
}

engine::HalfOpenInterval MatchingInstance::initial_interval() const {
  double alpha = 0.0;
  if (mode_ == geom::ExpansionMode::Multiplicative) alpha = std::max(0.0, min_critical_ * (1.0 - 1e-9));
  return {alpha, std::max(max_critical_, std::nextafter(alpha, INFINITY)), engine::Flip::TrueAtStar};
}

std::optional<double> MatchingInstance::degenerate_answer() const {
  if (degenerate_) return 0.0;
  return std::nullopt;
}

std::uint64_t MatchingInstance::decision_budget(const engine::Bracket& bracket) const {
  return windows_.size() + 2 * windows_.count_open(bracket.hi) + 2;
}

std::uint64_t MatchingInstance::tuple_count() const {
  const std::uint64_t n = disks_.size();
  return n * (n - 1) / 2;
}

std::vector<CriticalEvent> MatchingInstance::sample_criticals(std::size_t count, engine::Rng& rng) const {
  std::uniform_int_distribution<std::size_t> pick(0, disks_.size() - 1);
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

std::uint64_t MatchingInstance::count_in_range(double lo, double hi, std::uint64_t cap) const {
  std::uint64_t count = 0;
  if (cap == 0 || lo > hi) return 0;
  windows_.for_each_open(hi, [&](std::size_t i, std::size_t j) {
    const double c = critical(i, j);
    if (c >= lo && c <= hi) ++count;
    return count < cap;
  });
  return count;
}

std::vector<CriticalEvent> MatchingInstance::enumerate_in_range(double lo, double hi) const {
  std::vector<CriticalEvent> out;
  if (lo > hi) return out;
  windows_.for_each_open(hi, [&](std::size_t i, std::size_t j) {
    const double c = critical(i, j);
    if (c >= lo && c <= hi) out.push_back(CriticalEvent::pair(c, i, j));
    return true;
  });
  return out;
}

}  // namespace bifurcate::problems
