#pragma once

#include <vector>

#include "bifurcate/problems/matching.hpp"

namespace bifurcate::oracle {

using Adjacency = std::vector<std::vector<std::size_t>>;

/// Perfect matching by exhaustive search; refuses above kMaxExhaustiveMatching vertices.
bool has_perfect_matching_exhaustive(const Adjacency& adj);

/// Maximum matching size by a standalone Edmonds blossom implementation.
std::size_t blossom_matching_size(const Adjacency& adj);

/// Disk intersection graph at r with independently computed criticals.
Adjacency disk_graph(const problems::MatchingInstance& inst, double r);

bool matching_decide(const problems::MatchingInstance& inst, double r);

/// Sorted criticals plus binary search with matching_decide. Degenerate
/// inputs (perfect matching at r = 0) give 0.
double matching_solve(const problems::MatchingInstance& inst);

}  // namespace bifurcate::oracle
