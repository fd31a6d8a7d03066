#pragma once

#include <Eigen/Dense>
#include <vector>

#include "comblap/edge_set.hpp"

namespace comblap {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Immutable snapshot of a weighted graph: edge set, weights w, combinatorial
/// Laplacian L = sum_e w_e g_e g_e^T and strengthened Laplacian Q = L + J/n.
/// Value semantics; safe to share read-only across threads.
struct GraphState {
  EdgeSet edge_set;
  Vector w;
  Matrix laplacian;
  Matrix strengthened;

  int node_count() const { return edge_set.node_count(); }
};

/// Assembles L and Q from nonnegative edge weights.
GraphState build_laplacian(const EdgeSet& edge_set, const Vector& w);

/// Strengthened Laplacian Q = L + (1/n) J for the given weights, without the
/// full GraphState (Q is all the dense solver state needs at refresh points).
Matrix build_strengthened(const EdgeSet& edge_set, const Vector& w);

/// True iff every node pair is joined by a path of strictly positive-weight
/// edges. Exact union-find test on the support, no spectral tolerances.
bool is_connected_support(const EdgeSet& edge_set, const Vector& w);

/// Connected components of the support {e : w_e > 0}. Pass w of ones (or use
/// the overload) for the support of the whole edge set.
std::vector<std::vector<int>> support_components(const EdgeSet& edge_set, const Vector& w);
std::vector<std::vector<int>> support_components(const EdgeSet& edge_set);

/// log det(Q) through a Cholesky factorization. A non-positive pivot is
/// reported as DisconnectedError (Q of a connected graph is positive definite).
double strengthened_log_det(const Matrix& strengthened);

/// log of the spanning-tree weight sum: log det(Q) - log n.
/// Throws DisconnectedError instead of returning -inf on disconnected support.
double log_tree_weight(const GraphState& state);

/// F(L) = -log det(Q) + sum_e h_e w_e, the penalized objective.
double objective(const GraphState& state);

}  // namespace comblap
