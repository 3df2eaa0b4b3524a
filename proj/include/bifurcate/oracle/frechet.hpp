#pragma once

#include "bifurcate/problems/frechet.hpp"

namespace bifurcate::oracle {

/// Exhaustive dynamic program over all monotone pair sequences.
bool dfds_decide(const problems::FrechetInstance& inst, double eps);

/// Sorts all bichromatic distances and binary-searches with dfds_decide.
double dfds_solve(const problems::FrechetInstance& inst);

}  // namespace bifurcate::oracle
