#include <algorithm>
#include <variant>
#include <vector>

#include "bifurcate/engine/solver.hpp"
#include "bifurcate/error.hpp"
#include "bifurcate/geom/tolerance.hpp"
#include "bifurcate/log.hpp"

namespace bifurcate::engine {

namespace {

// Children are fork indices when >= 0 and leaf indices encoded as -(i+1).
using NodeRef = std::int64_t;
constexpr NodeRef kUnset = std::numeric_limits<NodeRef>::min();

struct Fork {
  double t;
  CriticalEvent event;
  NodeRef child[2] = {kUnset, kUnset};  // [0]: r* < t, [1]: r* >= t
};

struct Leaf {
  std::unique_ptr<Simulation> sim;
  bool done = false;
};

struct Branch {
  std::unique_ptr<Simulation> sim;
  std::uint64_t depth = 0;
  NodeRef parent = -1;
  int side = 0;
};

class Tree {
 public:
  NodeRef root = kUnset;
  std::vector<Fork> forks;
  std::vector<Leaf> leaves;

  void attach(const Branch& br, NodeRef node) {
    if (br.parent < 0) {
      root = node;
    } else {
      forks[br.parent].child[br.side] = node;
    }
  }
  void add_leaf(Branch& br, bool done) {
    leaves.push_back({std::move(br.sim), done});
    attach(br, -static_cast<NodeRef>(leaves.size()));
  }
};

}  // namespace

std::uint64_t phase_node_cap(std::uint64_t budget, std::uint64_t s) {
  const std::uint64_t q = budget / s;
  if (q == 0) return 1;
  return q + (2 * q - 1) * s;
}

PhaseResult run_phase(SearchState& state, const Simulation& root, std::uint64_t s, std::uint64_t budget) {
  if (s < 1) throw InputError("run_phase: branch budget s must be at least 1");
  Telemetry& tel = state.telemetry();
  PhaseRecord record;
  const std::uint64_t calls_before = tel.decide_calls;

  const std::uint64_t cap = phase_node_cap(budget, s);
  Tree tree;
  std::vector<Branch> stack;
  stack.push_back({root.clone(), 0, -1, 0});
  bool cut = false;

  while (!stack.empty()) {
    Branch br = std::move(stack.back());
    stack.pop_back();
    for (;;) {
      if (br.depth >= s) {
        tree.add_leaf(br, false);
        break;
      }
      if (cut || record.tree_nodes >= cap) {
        cut = true;
        tree.add_leaf(br, false);
        break;
      }
      Step step = br.sim->step();
      if (std::holds_alternative<Done>(step)) {
        tree.add_leaf(br, true);
        break;
      }
      const Comparison& cmp = std::get<NeedCompare>(step).comparison;
      ++record.tree_nodes;
      const double t = threshold(cmp);
      const std::optional<bool> known = state.known_at_least(t);
      if (known) {
        if (*known) {
          state.raise_lo(t, &cmp.event);
        } else {
          state.lower_hi(geom::next_down(t), &cmp.event);
        }
        br.sim->answer(*known);
        ++br.depth;
        ++tel.comparisons_resolved;
        continue;
      }
      const auto f = static_cast<NodeRef>(tree.forks.size());
      tree.forks.push_back({t, cmp.event});
      tree.attach(br, f);
      ++record.bifurcations;
      if (cmp.event.kind == EventKind::NonPair) ++record.nonpair_bifurcations;

      Branch below{br.sim->clone(), 0, f, 0};
      below.sim->answer(false);
      br.sim->answer(true);
      Branch above{std::move(br.sim), 0, f, 1};
      stack.push_back(std::move(above));
      stack.push_back(std::move(below));
      break;
    }
  }

  // One binary search over the distinct fork thresholds.
  std::vector<const Fork*> order;
  order.reserve(tree.forks.size());
  for (const auto& f : tree.forks) order.push_back(&f);
  std::sort(order.begin(), order.end(), [](const Fork* a, const Fork* b) {
    if (a->t != b->t) return a->t < b->t;
    return a->event.kind < b->event.kind;
  });
  order.erase(std::unique(order.begin(), order.end(), [](const Fork* a, const Fork* b) { return a->t == b->t; }),
              order.end());
  std::ptrdiff_t holds = -1;
  auto fails = static_cast<std::ptrdiff_t>(order.size());
  while (fails - holds > 1) {
    const std::ptrdiff_t mid = holds + (fails - holds) / 2;
    const double t = order[mid]->t;
    std::optional<bool> known = state.known_at_least(t);
    const bool at_least = known ? *known : !state.star_at_most(geom::next_down(t));
    if (at_least) {
      holds = mid;
    } else {
      fails = mid;
    }
  }
  if (holds >= 0) state.raise_lo(order[holds]->t, &order[holds]->event);
  if (fails < static_cast<std::ptrdiff_t>(order.size())) {
    state.lower_hi(geom::next_down(order[fails]->t), &order[fails]->event);
  }

  // Walk the unique path consistent with the narrowed bracket.
  NodeRef node = tree.root;
  while (node >= 0) {
    const Fork& f = tree.forks[node];
    const std::optional<bool> known = state.known_at_least(f.t);
    if (!known) throw InternalError("fork threshold left unresolved after phase search");
    if (*known) {
      state.raise_lo(f.t, &f.event);
    } else {
      state.lower_hi(geom::next_down(f.t), &f.event);
    }
    node = f.child[*known ? 1 : 0];
  }
  if (node == kUnset) throw InternalError("bifurcation tree has a dangling branch");
  Leaf& leaf = tree.leaves[static_cast<std::size_t>(-node - 1)];

  record.successful = !cut;
  record.decide_calls = tel.decide_calls - calls_before;
  tel.tree_nodes += record.tree_nodes;
  tel.bifurcations += record.bifurcations;
  tel.nonpair_bifurcations += record.nonpair_bifurcations;
  (record.successful ? tel.phases_successful : tel.phases_unsuccessful) += 1;
  tel.phases.push_back(record);
  log().debug("phase {}: {} nodes, {} forks, {} -> [{}, {}]", tel.phases.size(), record.tree_nodes,
              record.bifurcations, record.successful ? "successful" : "unsuccessful", state.bracket().lo,
              state.bracket().hi);

  PhaseResult result;
  result.successful = record.successful;
  result.finished = leaf.done;
  result.resume = std::move(leaf.sim);
  return result;
}

}  // namespace bifurcate::engine
