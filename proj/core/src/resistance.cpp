#include "comblap/resistance.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <stdexcept>
#include <string>

namespace comblap {

SigmaMatrix SigmaMatrix::from_strengthened(const Matrix& strengthened) {
  SigmaMatrix s;
  s.refresh(strengthened);
  return s;
}

void SigmaMatrix::refresh(const Matrix& strengthened) {
  Eigen::LLT<Matrix> llt(strengthened);
  if (llt.info() != Eigen::Success) {
    throw DisconnectedError("initial graph not connected: strengthened Laplacian factorization failed");
  }
  const auto n = strengthened.rows();
  sigma_ = llt.solve(Matrix::Identity(n, n));
  sigma_ = ((sigma_ + sigma_.transpose()) * 0.5).eval();  // exact symmetry
  log_det_ = 2.0 * llt.matrixLLT().diagonal().array().log().sum();
  updates_since_refresh_ = 0;
  column_gap_.resize(n);
}

void SigmaMatrix::rank_one_update(const Edge& e, double delta) {
  if (delta == 0.0) return;
  const double r = node_resistance(e.i, e.j);
  const double denom = 1.0 + delta * r;
  if (!(denom > 0.0)) {
    throw std::logic_error("Sherman-Morrison denominator 1 + delta*r = " +
                           std::to_string(denom) + " <= 0: solver invariant violated");
  }
  column_gap_ = sigma_.col(e.i) - sigma_.col(e.j);
  // Lower-triangle rank-one update, then mirror: keeps sigma exactly symmetric.
  sigma_.selfadjointView<Eigen::Lower>().rankUpdate(column_gap_, -delta / denom);
  sigma_.triangularView<Eigen::StrictlyUpper>() = sigma_.transpose();
  log_det_ += std::log1p(delta * r);
  ++updates_since_refresh_;
}

double updated_resistance(const SigmaMatrix& sigma_before, const Edge& e, double delta,
                          const Edge& f) {
  const auto& s = sigma_before;
  const double r_e = s.resistance(e);
  const double r_f = s.resistance(f);
  const double cross = -s.node_resistance(e.i, f.i) + s.node_resistance(e.i, f.j) +
                       s.node_resistance(e.j, f.i) - s.node_resistance(e.j, f.j);
  const double z = cross * cross / 4.0;
  return r_f - delta * z / (1.0 + delta * r_e);
}

}  // namespace comblap
