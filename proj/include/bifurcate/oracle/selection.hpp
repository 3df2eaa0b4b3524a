#pragma once

#include <vector>

#include "bifurcate/problems/selection.hpp"

namespace bifurcate::oracle {

/// Pair critical value from an independent closed form (+inf if never).
double selection_critical(const problems::PlanarObjects& objects, geom::ExpansionMode mode, std::size_t i,
                          std::size_t j);

/// All finite pair criticals, sorted.
std::vector<double> selection_all_criticals(const problems::PlanarObjects& objects, geom::ExpansionMode mode);

/// Pairs whose expanded copies intersect at r, by an independent O(n^2) test.
std::uint64_t selection_brute_count(const problems::PlanarObjects& objects, geom::ExpansionMode mode, double r);

/// The k-th smallest pair critical.
double selection_solve(const problems::SelectionInstance& inst);

}  // namespace bifurcate::oracle
