#include "comblap/graph_state.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <string>

#include "comblap/union_find.hpp"

namespace comblap {

GraphState build_laplacian(const EdgeSet& edge_set, const Vector& w) {
  const int n = edge_set.node_count();
  const int m = edge_set.edge_count();
  if (w.size() != m) {
    throw InputError("weight vector length " + std::to_string(w.size()) +
                     " does not match edge count " + std::to_string(m));
  }
  for (int e = 0; e < m; ++e) {
    if (!(w[e] >= 0.0)) {
      throw InputError("negative or NaN weight w=" + std::to_string(w[e]) +
                       " on edge index " + std::to_string(e));
    }
  }
  Matrix L = Matrix::Zero(n, n);
  for (int e = 0; e < m; ++e) {
    const Edge& ed = edge_set.edge(e);
    const double we = w[e];
    L(ed.i, ed.i) += we;
    L(ed.j, ed.j) += we;
    L(ed.i, ed.j) -= we;
    L(ed.j, ed.i) -= we;
  }
  Matrix Q = L;
  Q.array() += 1.0 / n;
  return GraphState{edge_set, w, std::move(L), std::move(Q)};
}

Matrix build_strengthened(const EdgeSet& edge_set, const Vector& w) {
  const int n = edge_set.node_count();
  Matrix Q = Matrix::Constant(n, n, 1.0 / n);
  for (int e = 0; e < edge_set.edge_count(); ++e) {
    const Edge& ed = edge_set.edge(e);
    const double we = w[e];
    Q(ed.i, ed.i) += we;
    Q(ed.j, ed.j) += we;
    Q(ed.i, ed.j) -= we;
    Q(ed.j, ed.i) -= we;
  }
  return Q;
}

bool is_connected_support(const EdgeSet& edge_set, const Vector& w) {
  UnionFind uf(edge_set.node_count());
  for (int e = 0; e < edge_set.edge_count(); ++e) {
    if (w[e] > 0.0) uf.unite(edge_set.edge(e).i, edge_set.edge(e).j);
  }
  return uf.component_count() == 1;
}

std::vector<std::vector<int>> support_components(const EdgeSet& edge_set, const Vector& w) {
  const int n = edge_set.node_count();
  UnionFind uf(n);
  for (int e = 0; e < edge_set.edge_count(); ++e) {
    if (w[e] > 0.0) uf.unite(edge_set.edge(e).i, edge_set.edge(e).j);
  }
  std::vector<std::vector<int>> by_root(n);
  for (int v = 0; v < n; ++v) by_root[uf.find(v)].push_back(v);
  std::vector<std::vector<int>> components;
  for (auto& group : by_root) {
    if (!group.empty()) components.push_back(std::move(group));
  }
  return components;
}

std::vector<std::vector<int>> support_components(const EdgeSet& edge_set) {
  return support_components(edge_set, Vector::Ones(edge_set.edge_count()));
}

double strengthened_log_det(const Matrix& strengthened) {
  Eigen::LLT<Matrix> llt(strengthened);
  if (llt.info() != Eigen::Success) {
    throw DisconnectedError(
        "strengthened Laplacian is not positive definite: graph support is disconnected");
  }
  return 2.0 * llt.matrixLLT().diagonal().array().log().sum();
}

double log_tree_weight(const GraphState& state) {
  if (!is_connected_support(state.edge_set, state.w)) {
    throw DisconnectedError(
        "log_tree_weight undefined: support is disconnected (tree weight sum is 0)",
        support_components(state.edge_set, state.w));
  }
  return strengthened_log_det(state.strengthened) - std::log(double(state.node_count()));
}

double objective(const GraphState& state) {
  if (!is_connected_support(state.edge_set, state.w)) {
    throw DisconnectedError("objective undefined on disconnected support",
                            support_components(state.edge_set, state.w));
  }
  double linear = 0.0;
  for (int e = 0; e < state.edge_set.edge_count(); ++e) {
    linear += state.edge_set.cost(e) * state.w[e];
  }
  return -strengthened_log_det(state.strengthened) + linear;
}

}  // namespace comblap
