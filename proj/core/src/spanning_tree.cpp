#include "comblap/spanning_tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "comblap/union_find.hpp"

namespace comblap {

TreeInit mst_initialize(const EdgeSet& edge_set) {
  const int n = edge_set.node_count();
  const int m = edge_set.edge_count();

  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (edge_set.cost(a) != edge_set.cost(b)) return edge_set.cost(a) < edge_set.cost(b);
    if (edge_set.edge(a).i != edge_set.edge(b).i) return edge_set.edge(a).i < edge_set.edge(b).i;
    return edge_set.edge(a).j < edge_set.edge(b).j;
  });

  TreeInit init;
  init.edge_indices.reserve(n - 1);
  init.w0 = Vector::Zero(m);
  UnionFind uf(n);
  for (int e : order) {
    if (uf.unite(edge_set.edge(e).i, edge_set.edge(e).j)) {
      init.edge_indices.push_back(e);
      init.w0[e] = 1.0 / edge_set.cost(e);
      if (static_cast<int>(init.edge_indices.size()) == n - 1) break;
    }
  }
  if (static_cast<int>(init.edge_indices.size()) != n - 1) {
    throw DisconnectedError("cannot build a spanning tree: edge set support is disconnected",
                            support_components(edge_set));
  }
  init.f0 = initial_objective(init, edge_set);
  return init;
}

double initial_objective(const TreeInit& tree, const EdgeSet& edge_set) {
  const int n = edge_set.node_count();
  double sum_log_h = 0.0;
  for (int e : tree.edge_indices) sum_log_h += std::log(edge_set.cost(e));
  return -std::log(double(n)) + sum_log_h + (n - 1);
}

}  // namespace comblap
