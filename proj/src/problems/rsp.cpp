#include "bifurcate/problems/rsp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <unordered_map>

#include "bifurcate/error.hpp"
#include "bifurcate/problems/pair_grid.hpp"

namespace bifurcate::problems {

using engine::Comparison;
using engine::CriticalEvent;
using engine::Done;
using engine::NeedCompare;
using engine::Step;
using engine::Strictness;

namespace {

constexpr double kSlack = 1e-9;

using CellKey = std::array<std::int64_t, 3>;

struct CellKeyHash {
  std::size_t operator()(const CellKey& k) const {
    std::uint64_t h = 0x9E3779B97F4A7C15ull;
    for (auto v : k) {
      h ^= static_cast<std::uint64_t>(v) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// Immutable part of the grid once every point has a cell.
struct GridIndex {
  std::unordered_map<CellKey, std::uint32_t, CellKeyHash> bucket_of;
  std::vector<std::uint32_t> begin;
};

class RspMachine final : public engine::CopyableSimulation<RspMachine> {
 public:
  explicit RspMachine(const RspInstance& inst)
      : inst_(&inst), n_(inst.points().size()), dim_(inst.points().dim()), cells_(n_ * dim_, 0) {}

  Step step() override {
    for (;;) {
      switch (stage_) {
        case Stage::Direct:
          pending_ = Pending::Direct;
          return pair_question(inst_->source(), inst_->target());
        case Stage::Lower:
          pending_ = Pending::Lower;
          return NeedCompare{{CriticalEvent::non_pair(inst_->lower_bound()), Strictness::AtMost}};
        case Stage::Assign:
          if (auto q = assign_next()) return *q;
          build_grid();
          stage_ = inst_->weighted() ? Stage::Dijkstra : Stage::Bfs;
          start_search();
          break;
        case Stage::Bfs:
          if (auto q = bfs_next()) return *q;
          break;
        case Stage::Dijkstra:
          if (auto q = dijkstra_next()) return *q;
          break;
        case Stage::Finished:
          return Done{accept_};
      }
    }
  }

  void answer(bool holds) override {
    switch (pending_) {
      case Pending::Direct:
        if (holds) {
          finish(true);
        } else if (n_ == 2 || (!inst_->weighted() && std::get<HopBound>(inst_->bound()).k == 1)) {
          finish(false);
        } else {
          stage_ = Stage::Lower;
        }
        break;
      case Pending::Lower:
        if (holds) {
          stage_ = Stage::Assign;
        } else {
          finish(false);
        }
        break;
      case Pending::CellPositive:
        // Asked "d*f/mid < r"; the cell reaches mid when that fails.
        if (holds) bs_hi_ = bs_mid_; else bs_lo_ = bs_mid_;
        break;
      case Pending::CellNegative:
        if (holds) bs_hi_ = bs_mid_; else bs_lo_ = bs_mid_;
        break;
      case Pending::Edge:
        if (stage_ == Stage::Bfs) {
          bfs_edge(holds);
        } else {
          dijkstra_edge(holds);
        }
        break;
      case Pending::None:
        break;
    }
    pending_ = Pending::None;
  }

 private:
  enum class Stage : std::uint8_t { Direct, Lower, Assign, Bfs, Dijkstra, Finished };
  enum class Pending : std::uint8_t { None, Direct, Lower, CellPositive, CellNegative, Edge };

  NeedCompare pair_question(std::size_t u, std::size_t v) const {
    return NeedCompare{{CriticalEvent::pair(inst_->points().distance(u, v), std::min(u, v), std::max(u, v)),
                        Strictness::AtMost}};
  }

  void finish(bool accept) {
    accept_ = accept;
    stage_ = Stage::Finished;
  }

  // --- grid assignment: one binary search per coordinate ---------------

  std::optional<Step> assign_next() {
    const auto& pts = inst_->points();
    const double f = inst_->cell_factor();
    const std::int64_t top = inst_->max_cell() + 1;
    while (ai_ < n_) {
      if (!bs_active_) {
        offset_ = pts[ai_][ac_] - pts[inst_->source()][ac_];
        if (offset_ == 0.0) {
          store_cell(0);
          continue;
        }
        bs_lo_ = 0;
        bs_hi_ = top;
        bs_active_ = true;
      }
      if (bs_hi_ - bs_lo_ > 1) {
        bs_mid_ = bs_lo_ + (bs_hi_ - bs_lo_) / 2;
        const double value = std::fabs(offset_) * f / static_cast<double>(bs_mid_);
        if (offset_ > 0.0) {
          // Largest j with j * r / f <= d, i.e. r <= d * f / j.
          pending_ = Pending::CellPositive;
          // holds means r > value: j = mid is too far.
          return Step{NeedCompare{{CriticalEvent::non_pair(value), Strictness::Below}}};
        }
        // Smallest m with m * r / f >= |d|, i.e. r >= |d| * f / m.
        pending_ = Pending::CellNegative;
        return Step{NeedCompare{{CriticalEvent::non_pair(value), Strictness::AtMost}}};
      }
      // Positive: bs_lo_ is the last j still reachable. Negative: bs_hi_ is m.
      store_cell(offset_ > 0.0 ? bs_lo_ : -bs_hi_);
    }
    return std::nullopt;
  }

  void store_cell(std::int64_t cell) {
    cells_[ai_ * dim_ + ac_] = cell;
    bs_active_ = false;
    if (++ac_ == dim_) {
      ac_ = 0;
      ++ai_;
    }
  }

  CellKey key_of(std::size_t i) const {
    CellKey k{0, 0, 0};
    for (std::size_t c = 0; c < dim_; ++c) k[c] = cells_[i * dim_ + c];
    return k;
  }

  void build_grid() {
    auto index = std::make_shared<GridIndex>();
    std::vector<std::uint32_t> bucket(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      auto [it, fresh] = index->bucket_of.try_emplace(key_of(i), static_cast<std::uint32_t>(index->bucket_of.size()));
      bucket[i] = it->second;
    }
    const std::size_t nb = index->bucket_of.size();
    index->begin.assign(nb + 1, 0);
    for (std::size_t i = 0; i < n_; ++i) ++index->begin[bucket[i] + 1];
    for (std::size_t b = 0; b < nb; ++b) index->begin[b + 1] += index->begin[b];
    len_.assign(nb, 0);
    members_.assign(n_, 0);
    where_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      const std::uint32_t b = bucket[i];
      const std::uint32_t slot = index->begin[b] + len_[b]++;
      members_[slot] = static_cast<std::uint32_t>(i);
      where_[i] = slot;
    }
    bucket_id_ = std::move(bucket);
    index_ = std::move(index);
  }

  void remove_from_grid(std::uint32_t v) {
    const std::uint32_t b = bucket_id_[v];
    const std::uint32_t last = index_->begin[b] + len_[b] - 1;
    const std::uint32_t slot = where_[v];
    const std::uint32_t moved = members_[last];
    members_[slot] = moved;
    where_[moved] = slot;
    members_[last] = v;
    where_[v] = last;
    --len_[b];
  }

  // Advances (offset code, bucket cursor) around the current center point and
  // returns the next candidate still in the grid, or nullopt when done.
  std::optional<std::uint32_t> next_candidate() {
    const std::int64_t total = dim_ == 2 ? 25 : 125;
    for (;;) {
      if (cur_bucket_ >= 0) {
        const auto b = static_cast<std::uint32_t>(cur_bucket_);
        if (cursor_ < len_[b]) return members_[index_->begin[b] + cursor_];
        cur_bucket_ = -1;
      }
      if (code_ >= total) return std::nullopt;
      CellKey k = key_of(center_);
      std::int64_t rest = code_++;
      for (std::size_t c = 0; c < dim_; ++c) {
        k[c] += rest % 5 - 2;
        rest /= 5;
      }
      auto it = index_->bucket_of.find(k);
      if (it != index_->bucket_of.end()) {
        cur_bucket_ = it->second;
        cursor_ = 0;
      }
    }
  }

  void begin_center(std::uint32_t u) {
    center_ = u;
    code_ = 0;
    cur_bucket_ = -1;
  }

  void start_search() {
    const auto s = static_cast<std::uint32_t>(inst_->source());
    remove_from_grid(s);
    if (stage_ == Stage::Bfs) {
      frontier_ = {s};
      next_.clear();
      level_ = 0;
      fi_ = 0;
      begin_center(s);
    } else {
      dist_.assign(n_, INFINITY);
      dist_[s] = 0.0;
      heap_.clear();
      push_heap(0.0, s);
      settled_.assign(n_, 0);
      settled_[s] = 0;
      has_center_ = false;
    }
  }

  // --- unweighted: level-by-level BFS -----------------------------------

  std::optional<Step> bfs_next() {
    const std::size_t k = std::get<HopBound>(inst_->bound()).k;
    for (;;) {
      if (auto v = next_candidate()) {
        candidate_ = *v;
        pending_ = Pending::Edge;
        return Step{pair_question(center_, candidate_)};
      }
      if (++fi_ < frontier_.size()) {
        begin_center(frontier_[fi_]);
        continue;
      }
      ++level_;
      if (next_.empty() || level_ >= k) {
        finish(false);
        return std::nullopt;
      }
      frontier_.swap(next_);
      next_.clear();
      fi_ = 0;
      begin_center(frontier_[0]);
    }
  }

  void bfs_edge(bool adjacent) {
    if (!adjacent) {
      ++cursor_;
      return;
    }
    remove_from_grid(candidate_);
    if (candidate_ == inst_->target()) {
      finish(true);
      return;
    }
    next_.push_back(candidate_);
  }

  // --- weighted: Dijkstra over grid candidates -----------------------------

  void push_heap(double d, std::uint32_t v) {
    heap_.push_back({d, v});
    std::push_heap(heap_.begin(), heap_.end(), std::greater<>());
  }

  std::optional<Step> dijkstra_next() {
    const double w = std::get<LengthBound>(inst_->bound()).w;
    for (;;) {
      if (has_center_) {
        if (auto v = next_candidate()) {
          candidate_ = *v;
          pending_ = Pending::Edge;
          return Step{pair_question(center_, candidate_)};
        }
        has_center_ = false;
      }
      if (heap_.empty()) {
        finish(false);
        return std::nullopt;
      }
      std::pop_heap(heap_.begin(), heap_.end(), std::greater<>());
      const auto [d, u] = heap_.back();
      heap_.pop_back();
      if (settled_[u] || d > dist_[u]) continue;
      settled_[u] = 1;
      if (u == inst_->target() || d > w) {
        finish(u == inst_->target() && d <= w);
        return std::nullopt;
      }
      if (u != inst_->source()) remove_from_grid(u);
      begin_center(u);
      has_center_ = true;
    }
  }

  void dijkstra_edge(bool adjacent) {
    ++cursor_;
    if (!adjacent) return;
    const double nd = dist_[center_] + inst_->points().distance(center_, candidate_);
    if (nd < dist_[candidate_]) {
      dist_[candidate_] = nd;
      push_heap(nd, candidate_);
    }
  }

  const RspInstance* inst_;
  std::size_t n_;
  std::size_t dim_;
  Stage stage_ = Stage::Direct;
  Pending pending_ = Pending::None;
  bool accept_ = false;

  // grid assignment
  std::vector<std::int64_t> cells_;
  std::size_t ai_ = 0;
  std::size_t ac_ = 0;
  bool bs_active_ = false;
  double offset_ = 0.0;
  std::int64_t bs_lo_ = 0, bs_hi_ = 0, bs_mid_ = 0;

  // grid buckets (index is shared between clones, membership is not)
  std::shared_ptr<const GridIndex> index_;
  std::vector<std::uint32_t> bucket_id_;
  std::vector<std::uint32_t> members_;
  std::vector<std::uint32_t> where_;
  std::vector<std::uint32_t> len_;

  // neighborhood walk
  std::uint32_t center_ = 0;
  std::int64_t code_ = 0;
  std::int64_t cur_bucket_ = -1;
  std::uint32_t cursor_ = 0;
  std::uint32_t candidate_ = 0;

  // BFS
  std::vector<std::uint32_t> frontier_;
  std::vector<std::uint32_t> next_;
  std::size_t fi_ = 0;
  std::size_t level_ = 0;

  // Dijkstra
  std::vector<double> dist_;
  std::vector<std::pair<double, std::uint32_t>> heap_;
  std::vector<char> settled_;
  bool has_center_ = false;
};

}  // namespace

RspInstance::RspInstance(geom::PointSet points, std::size_t s, std::size_t t, Bound bound)
    : points_(std::move(points)), s_(s), t_(t), bound_(bound) {
  const std::size_t n = points_.size();
  if (points_.dim() != 2 && points_.dim() != 3) throw InputError("udg-rsp: points must be 2D or 3D");
  if (n < 2) throw InputError("udg-rsp: need at least two points");
  if (s_ >= n || t_ >= n) throw InputError("udg-rsp: s or t index out of range");
  if (s_ == t_) throw InputError("udg-rsp: s and t must differ");
  span_ = points_.distance(s_, t_);
  if (!(span_ > 0.0)) throw InputError("udg-rsp: s and t coincide");
  if (const auto* hb = std::get_if<HopBound>(&bound_)) {
    if (hb->k < 1 || hb->k > n - 1) throw InputError("udg-rsp: k must lie in [1, n-1]");
    lower_ = span_ / static_cast<double>(hb->k) * (1.0 - kSlack);
  } else {
    const double w = std::get<LengthBound>(bound_).w;
    if (!std::isfinite(w) || w < span_) throw InputError("udg-rsp: w must be at least distance(s, t)");
    lower_ = span_ / static_cast<double>(n) * (1.0 - kSlack);
  }
  cell_factor_ = std::sqrt(static_cast<double>(points_.dim()));
  double reach = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < points_.dim(); ++c) reach = std::max(reach, std::fabs(points_[i][c] - points_[s_][c]));
  }
  max_cell_ = static_cast<std::int64_t>(std::ceil(reach * cell_factor_ / lower_)) + 1;
}

bool RspInstance::decide(double r) const {
  if (!(r > 0.0)) throw InputError("udg-rsp: decide requires r > 0");
  return ProblemInstance::decide(r);
}

std::unique_ptr<engine::Simulation> RspInstance::simulate() const { return std::make_unique<RspMachine>(*this); }

engine::HalfOpenInterval RspInstance::initial_interval() const {
  const double denom = weighted() ? static_cast<double>(points_.size()) : static_cast<double>(std::get<HopBound>(bound_).k);
  return {span_ / denom - kSlack * span_, span_, engine::Flip::TrueAtStar};
}

std::uint64_t RspInstance::decision_budget(const engine::Bracket& bracket) const {
  const std::uint64_t n = points_.size();
  const auto per_coord = static_cast<std::uint64_t>(std::ceil(std::log2(static_cast<double>(max_cell_) + 2.0))) + 1;
  // Candidates come from cells at most two apart, plus one for rounding.
  const double box = 4.0 * bracket.hi / cell_factor_;
  return 3 + n * points_.dim() * per_coord + count_chebyshev_pairs(points_, box);
}

std::uint64_t RspInstance::tuple_count() const {
  const std::uint64_t n = points_.size();
  return n * (n - 1) / 2;
}

std::vector<engine::CriticalEvent> RspInstance::sample_criticals(std::size_t count, engine::Rng& rng) const {
  std::uniform_int_distribution<std::size_t> pick(0, points_.size() - 1);
  std::vector<CriticalEvent> out;
  out.reserve(count);
  while (out.size() < count) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    out.push_back(CriticalEvent::pair(points_.distance(i, j), i, j));
  }
  return out;
}

std::uint64_t RspInstance::count_in_range(double lo, double hi, std::uint64_t cap) const {
  std::uint64_t count = 0;
  if (cap == 0 || lo > hi) return 0;
  for_each_pair_within(points_, hi, [&](std::size_t, std::size_t, double d) {
    if (d >= lo) ++count;
    return count < cap;
  });
  return count;
}

std::vector<engine::CriticalEvent> RspInstance::enumerate_in_range(double lo, double hi) const {
  std::vector<CriticalEvent> out;
  if (lo > hi) return out;
  for_each_pair_within(points_, hi, [&](std::size_t i, std::size_t j, double d) {
    if (d >= lo) out.push_back(CriticalEvent::pair(d, i, j));
    return true;
  });
  return out;
}

}  // namespace bifurcate::problems
