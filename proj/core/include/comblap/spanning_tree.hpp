#pragma once

#include <vector>

#include "comblap/edge_set.hpp"
#include "comblap/graph_state.hpp"

namespace comblap {

/// Initial connected support: the spanning tree of the candidate edge set
/// minimizing F, with its optimal per-edge weights and objective value.
struct TreeInit {
  std::vector<int> edge_indices;  // n-1 indices into the EdgeSet
  Vector w0;                      // full-length weights: 1/h_e on tree edges, 0 elsewhere
  double f0 = 0.0;                // F of the initialized tree
};

/// Minimum spanning tree under edge cost h (Kruskal, union-find), which is
/// the F-minimizing spanning tree: on a fixed tree det Q = n * prod w_e, so
/// F(tree) = -log n - sum log w_e + sum h_e w_e is minimized edgewise at
/// w_e = 1/h_e, leaving F = -log n + sum log h_e + (n-1); minimizing over
/// trees therefore minimizes sum log h_e, i.e. the MST under key log h_e,
/// equivalently h_e. Ties break by (h_e, i, j).
TreeInit mst_initialize(const EdgeSet& edge_set);

/// Closed-form objective of a weighted tree: -log n + sum_T log h_e + (n-1).
double initial_objective(const TreeInit& tree, const EdgeSet& edge_set);

}  // namespace comblap
