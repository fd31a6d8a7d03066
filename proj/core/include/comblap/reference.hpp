#pragma once

#include <vector>

#include "comblap/edge_set.hpp"
#include "comblap/graph_state.hpp"

namespace comblap {

// Deliberately simple, slow oracles. They cross-check the production path in
// tests and acceptance runs and must stay independent of it: no SigmaMatrix,
// no incremental updates, no closed-form coordinate steps.

/// Every spanning tree of the edge set, as lists of edge indices.
/// Exhaustive (inclusion/exclusion with union-find pruning); guarded to n <= 8.
std::vector<std::vector<int>> enumerate_spanning_trees(const EdgeSet& edge_set);

/// Spanning-tree weight sum by enumeration: sum over trees of prod w_e.
/// Zero when the support is disconnected. Guarded to n <= 8.
double brute_force_omega(const EdgeSet& edge_set, const Vector& w);

struct OracleResult {
  Vector w;
  double objective = 0.0;
  int iterations = 0;
  double stationarity = 0.0;  // max-norm projected-gradient residual at exit
};

/// First-order oracle for min F(w) over w >= 0: projected gradient with
/// Armijo backtracking (c = 0.5, shrink 0.5), gradient h_e - r_e, dense
/// recomputation of Q^{-1} each step. Starts from w_e = 1/h_e on every edge.
OracleResult projected_gradient_solve(const EdgeSet& edge_set, double tol,
                                      int max_iterations = 2000000);

}  // namespace comblap
