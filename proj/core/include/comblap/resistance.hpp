#pragma once

#include <Eigen/Dense>

#include "comblap/edge_set.hpp"
#include "comblap/graph_state.hpp"

namespace comblap {

/**
 * Dense inverse Sigma = Q^{-1} of the strengthened Laplacian, maintained
 * across rank-one edge-weight updates.
 *
 * Every effective resistance is an O(1) read,
 *
 *   r_ab = Sigma_aa + Sigma_bb - 2 Sigma_ab,
 *
 * and a weight change w_e += delta is an O(n^2) Sherman-Morrison update
 *
 *   Sigma' = Sigma - delta (Sigma g_e)(Sigma g_e)^T / (1 + delta r_e),
 *
 * with Sigma g_e read as column i minus column j. log det Q is carried along
 * through det(Q + delta g g^T) = (1 + delta r_e) det(Q).
 *
 * Repeated updates drift at floating-point scale, so callers refresh from a
 * fresh factorization periodically (the solver's policy: every 5m applied
 * updates or 10 epochs, whichever first). The matrix is kept exactly
 * symmetric: updates touch the lower triangle and mirror it.
 */
class SigmaMatrix {
 public:
  /// One dense SPD factorization of Q. Throws DisconnectedError when Q is
  /// not positive definite (i.e. the initial graph is not connected).
  static SigmaMatrix from_strengthened(const Matrix& strengthened);

  int size() const { return static_cast<int>(sigma_.rows()); }

  /// Effective resistance between any two nodes; zero when a == b.
  double node_resistance(int a, int b) const {
    return sigma_(a, a) + sigma_(b, b) - 2.0 * sigma_(a, b);
  }
  double resistance(const Edge& e) const { return node_resistance(e.i, e.j); }

  /// Applies Q += delta g_e g_e^T to the inverse in O(n^2). The denominator
  /// 1 + delta r_e is positive for every feasible coordinate update; a
  /// non-positive value indicates a solver bug, not bad input.
  void rank_one_update(const Edge& e, double delta);

  /// Fresh factorization of Q; resets the drift counter.
  void refresh(const Matrix& strengthened);

  int updates_since_refresh() const { return updates_since_refresh_; }

  /// log det Q, maintained incrementally and re-anchored at refresh.
  double log_det() const { return log_det_; }

  const Matrix& matrix() const { return sigma_; }

 private:
  SigmaMatrix() = default;

  Matrix sigma_;
  Vector column_gap_;  // scratch for Sigma g_e
  double log_det_ = 0.0;
  int updates_since_refresh_ = 0;
};

/// Resistance of edge f after the update (e, delta), from pre-update
/// resistances only:
///
///   r_f' = r_f - delta z_ef / (1 + delta r_e),
///   z_ef = (-r_is + r_it + r_js - r_jt)^2 / 4   for e=(i,j), f=(s,t).
///
/// Validation-only route: production code reads resistances from the updated
/// Sigma; this cross-checks those reads against the closed form.
double updated_resistance(const SigmaMatrix& sigma_before, const Edge& e, double delta,
                          const Edge& f);

}  // namespace comblap
