#include <algorithm>
#include <vector>

#include "bifurcate/engine/solver.hpp"
#include "bifurcate/error.hpp"
#include "bifurcate/geom/tolerance.hpp"
#include "bifurcate/log.hpp"

namespace bifurcate::engine {

namespace {

constexpr std::uint64_t kEnumerateLimit = std::uint64_t{1} << 20;
constexpr std::size_t kMinLanded = 16;

// Binary search for the first split v with r* <= v; the bracket then runs
// from just above the previous split to v.
void search_splits(SearchState& state, const std::vector<CriticalEvent>& splits) {
  std::ptrdiff_t below = -1;
  auto above = static_cast<std::ptrdiff_t>(splits.size());
  while (above - below > 1) {
    const std::ptrdiff_t mid = below + (above - below) / 2;
    if (state.star_at_most(splits[mid].value)) {
      above = mid;
    } else {
      below = mid;
    }
  }
  if (above < static_cast<std::ptrdiff_t>(splits.size())) state.lower_hi(splits[above].value, &splits[above]);
  if (below >= 0) state.raise_lo(geom::next_up(splits[below].value), nullptr);
}

bool by_value(const CriticalEvent& a, const CriticalEvent& b) {
  if (a.value != b.value) return a.value < b.value;
  return a.kind < b.kind;
}

bool same_value(const CriticalEvent& a, const CriticalEvent& b) { return a.value == b.value; }

}  // namespace

void shrink_interval(SearchState& state, const ShrinkOptions& options, Rng& rng) {
  if (options.L < 1) throw InputError("shrink_interval: L must be at least 1");
  const ProblemInstance& problem = state.problem();
  Telemetry& tel = state.telemetry();
  tel.L = options.L;
  const std::uint64_t tuples = problem.tuple_count();
  std::size_t samples = options.initial_samples;

  for (int round = 0;; ++round) {
    const Bracket b = state.bracket();
    const std::uint64_t count = problem.count_in_range(b.lo, b.hi, std::max(options.L + 1, kEnumerateLimit));
    if (count <= options.L || b.singular()) {
      tel.shrink_count = std::min(count, options.L + 1);
      tel.shrink_certified = true;
      log().debug("shrink certified after {} rounds: [{}, {}] holds {} criticals", round, b.lo, b.hi, count);
      return;
    }
    if (round == options.max_rounds) {
      throw InternalError("interval shrinking not certified after " + std::to_string(round) + " rounds (" +
                          std::to_string(count) + " criticals left, L=" + std::to_string(options.L) +
                          ", decide_calls=" + std::to_string(tel.decide_calls) + ")");
    }
    ++tel.shrink_rounds;

    // Every remaining critical equals hi: one decide settles r* == hi.
    if (problem.count_in_range(b.lo, geom::next_down(b.hi), 1) == 0) {
      if (state.star_at_most(geom::next_down(b.hi))) {
        state.lower_hi(geom::next_down(b.hi), nullptr);
      } else {
        state.raise_lo(b.hi, nullptr);
      }
      continue;
    }

    const bool sparse = count < kEnumerateLimit &&
                        static_cast<double>(count) * static_cast<double>(samples) <
                            static_cast<double>(kMinLanded) * static_cast<double>(tuples);
    std::vector<CriticalEvent> splits;
    if (samples >= tuples || sparse) {
      std::vector<CriticalEvent> all = problem.enumerate_in_range(b.lo, b.hi);
      std::sort(all.begin(), all.end(), by_value);
      // Greedy windows of at most L values; a value repeated more than L
      // times gets a window to itself.
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < all.size();) {
        std::size_t j = i;
        while (j < all.size() && all[j].value == all[i].value) ++j;
        if (acc > 0 && acc + (j - i) > options.L) {
          splits.push_back(all[i - 1]);
          acc = 0;
        }
        acc += j - i;
        i = j;
      }
    } else {
      for (const auto& e : problem.sample_criticals(samples, rng)) {
        if (b.contains(e.value)) splits.push_back(e);
      }
      std::sort(splits.begin(), splits.end(), by_value);
      splits.erase(std::unique(splits.begin(), splits.end(), same_value), splits.end());
      if (splits.size() < kMinLanded) samples = static_cast<std::size_t>(std::min<std::uint64_t>(2 * samples, tuples));
    }
    search_splits(state, splits);
  }
}

}  // namespace bifurcate::engine
