#pragma once

#include "bifurcate/problems/rsp.hpp"

namespace bifurcate::oracle {

/// Adjacency-matrix BFS (hop bound) or Dijkstra (length bound) on G(r).
bool rsp_decide(const problems::RspInstance& inst, double r);

/// Sorts every pairwise distance and binary-searches with rsp_decide.
double rsp_solve(const problems::RspInstance& inst);

}  // namespace bifurcate::oracle
