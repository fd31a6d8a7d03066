#pragma once

#include <string>

#include "comblap/costs.hpp"
#include "comblap/edge_set.hpp"
#include "comblap/graph_state.hpp"

namespace comblap {

enum class TopologyKind { complete, knn, file };

struct TopologySpec {
  TopologyKind kind = TopologyKind::complete;
  int k = 0;          // knn only, 1 <= k <= n-1
  std::string path;   // file only
};

/// All n(n-1)/2 pairs, lexicographic order, costs from the table.
EdgeSet complete_edge_set(const Matrix& cost_table);

/// K-nearest-neighbor edge set under ascending cost, union symmetrization:
/// (i,j) is kept iff j is among the K cheapest partners of i or vice versa.
/// Ties at the K-th neighbor break toward the smaller node index; output
/// edges are sorted lexicographically, each carrying its cost.
EdgeSet knn_edge_set(const Matrix& cost_table, int k);

/// Throws DisconnectedError (naming the components) unless the support of
/// the candidate edge set is connected. The objective is undefined on
/// disconnected support, so this runs before any solve.
void validate_connected(const EdgeSet& edge_set);

}  // namespace comblap
