#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "bifurcate/engine/event.hpp"
#include "bifurcate/engine/interval.hpp"
#include "bifurcate/engine/problem.hpp"
#include "bifurcate/engine/simulation.hpp"
#include "bifurcate/engine/telemetry.hpp"

namespace bifurcate::engine {

/// Tracks the bracket around r* plus the events that produced its ends,
/// and funnels every unsimulated decide call through one counter.
class SearchState {
 public:
  SearchState(const ProblemInstance& problem, Telemetry& telemetry);

  const ProblemInstance& problem() const { return problem_; }
  Flip flip() const { return flip_; }
  const Bracket& bracket() const { return bracket_; }
  Telemetry& telemetry() { return telemetry_; }

  /// Checks the initial interval with two decide calls.
  void start();

  /// Does r* <= x hold?
  bool star_at_most(double x);

  /// Does r* >= t hold? Answers from the bracket when it can.
  std::optional<bool> known_at_least(double t) const;

  void raise_lo(double lo, const CriticalEvent* source);
  void lower_hi(double hi, const CriticalEvent* source);

  /// Resolves a comparison against the bracket, deciding if needed.
  bool resolve(const Comparison& cmp);

  /// When the bracket end on r*'s side is itself a critical value and no
  /// other critical lies in the bracket, r* equals it; collapse the bracket.
  bool certify_equality();

  /// Final value once the search has pinned r*.
  double answer() const { return flip_ == Flip::TrueAtStar ? bracket_.lo : bracket_.hi; }
  std::optional<CriticalEvent> witness() const;

 private:
  const ProblemInstance& problem_;
  Telemetry& telemetry_;
  Flip flip_;
  Bracket bracket_;
  std::optional<CriticalEvent> lo_event_;
  std::optional<CriticalEvent> hi_event_;
};

struct ShrinkOptions {
  std::uint64_t L = 1;
  std::size_t initial_samples = 128;
  int max_rounds = 64;
};

/// Narrows the bracket until at most L critical values remain in it,
/// certified by the problem's counter before returning.
void shrink_interval(SearchState& state, const ShrinkOptions& options, Rng& rng);

struct PhaseResult {
  bool successful = true;
  /// The leaf on r*'s path is a completed run.
  bool finished = false;
  std::unique_ptr<Simulation> resume;
};

/// Node cap of one phase tree. A tree with x forks holds at most
/// x + (2x+1)s nodes, so any tree reaching this cap has at least floor(D/s)
/// forks.
std::uint64_t phase_node_cap(std::uint64_t budget, std::uint64_t s);

/// One bifurcation-tree phase from `root` with branch budget s and decision
/// budget D; the tree is cut at phase_node_cap(D, s) nodes. Returns the simulation state at the leaf consistent with r*.
PhaseResult run_phase(SearchState& state, const Simulation& root, std::uint64_t s, std::uint64_t budget);

struct SolveOptions {
  /// Explicit L; nullopt picks the balancing default.
  std::optional<std::uint64_t> L;
};

struct SolveResult {
  double r_star = 0.0;
  std::optional<CriticalEvent> witness;
  HalfOpenInterval final_interval;
  Telemetry telemetry;
  /// r* sits on the domain boundary; see ProblemInstance::degenerate_answer.
  bool degenerate = false;
};

std::uint64_t auto_L(std::size_t n, std::uint64_t budget);
std::uint64_t branch_budget(std::uint64_t budget, std::uint64_t L);

SolveResult solve(const ProblemInstance& problem, const SolveOptions& options, Rng& rng);

/// Shrink to a few thousand criticals, enumerate them, binary search.
SolveResult baseline_solve(const ProblemInstance& problem, Rng& rng);

}  // namespace bifurcate::engine
