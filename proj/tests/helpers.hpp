#pragma once

#include <random>
#include <vector>

#include "comblap/edge_set.hpp"
#include "comblap/graph_state.hpp"

namespace comblap::testing {

/// Random connected edge set: a uniform-attachment spanning tree plus each
/// remaining pair independently with probability extra_edge_prob. Costs are
/// U(h_min, h_max). Edges come out in lexicographic order.
inline EdgeSet random_connected_edge_set(std::mt19937_64& rng, int n,
                                         double extra_edge_prob = 0.3,
                                         double h_min = 0.5, double h_max = 3.0) {
  std::uniform_real_distribution<double> cost(h_min, h_max);
  std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
  for (int v = 1; v < n; ++v) {
    const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    present[u][v] = 1;
  }
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!present[i][j] && coin(rng) < extra_edge_prob) present[i][j] = 1;
    }
  }
  std::vector<Edge> edges;
  std::vector<double> costs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (present[i][j]) {
        edges.emplace_back(i, j);
        costs.push_back(cost(rng));
      }
    }
  }
  return EdgeSet(n, std::move(edges), std::move(costs));
}

inline Vector random_weights(std::mt19937_64& rng, int m, double lo = 0.1, double hi = 2.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Vector w(m);
  for (int e = 0; e < m; ++e) w[e] = dist(rng);
  return w;
}

/// Unit-cost edge set over an explicit pair list.
inline EdgeSet make_edge_set(int n, std::vector<std::pair<int, int>> pairs,
                             std::vector<double> costs = {}) {
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.emplace_back(a, b);
  if (costs.empty()) costs.assign(edges.size(), 1.0);
  return EdgeSet(n, std::move(edges), std::move(costs));
}

}  // namespace comblap::testing
