#pragma once

#include "bifurcate/problems/towers.hpp"

namespace bifurcate::oracle {

/// Maximum height of an intermediate vertex above the chord of bases i < j,
/// from an independent line evaluation; 0 when none lies above.
double towers_potential(const problems::TowersInstance& inst, std::size_t i, std::size_t j);

/// Some pair of tips at height h sees each other.
bool towers_visible(const problems::TowersInstance& inst, double h);

/// Minimum potential over all base pairs.
double towers_solve(const problems::TowersInstance& inst);

}  // namespace bifurcate::oracle
