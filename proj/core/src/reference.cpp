#include "comblap/reference.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "comblap/union_find.hpp"

namespace comblap {

namespace {

constexpr int kEnumerationNodeLimit = 8;

void enumerate_rec(const EdgeSet& es, int next_edge, UnionFind uf, std::vector<int>& chosen,
                   std::vector<std::vector<int>>& out) {
  const int n = es.node_count();
  const int m = es.edge_count();
  if (static_cast<int>(chosen.size()) == n - 1) {
    out.push_back(chosen);
    return;
  }
  // Not enough edges left to finish a tree.
  if (m - next_edge < (n - 1) - static_cast<int>(chosen.size())) return;

  // Include next_edge unless it closes a cycle.
  const Edge& e = es.edge(next_edge);
  if (!uf.connected(e.i, e.j)) {
    UnionFind with = uf;
    with.unite(e.i, e.j);
    chosen.push_back(next_edge);
    enumerate_rec(es, next_edge + 1, std::move(with), chosen, out);
    chosen.pop_back();
  }
  // Exclude next_edge.
  enumerate_rec(es, next_edge + 1, std::move(uf), chosen, out);
}

// log det of Q, or nothing when Q is not SPD (disconnected support).
std::optional<double> spd_log_det(const Matrix& Q) {
  Eigen::LLT<Matrix> llt(Q);
  if (llt.info() != Eigen::Success) return std::nullopt;
  return 2.0 * llt.matrixLLT().diagonal().array().log().sum();
}

Matrix strengthened_of(const EdgeSet& es, const Vector& w) {
  const int n = es.node_count();
  Matrix Q = Matrix::Constant(n, n, 1.0 / n);
  for (int e = 0; e < es.edge_count(); ++e) {
    const Edge& ed = es.edge(e);
    Q(ed.i, ed.i) += w[e];
    Q(ed.j, ed.j) += w[e];
    Q(ed.i, ed.j) -= w[e];
    Q(ed.j, ed.i) -= w[e];
  }
  return Q;
}

}  // namespace

std::vector<std::vector<int>> enumerate_spanning_trees(const EdgeSet& edge_set) {
  if (edge_set.node_count() > kEnumerationNodeLimit) {
    throw InputError("spanning tree enumeration is limited to n <= " +
                     std::to_string(kEnumerationNodeLimit));
  }
  std::vector<std::vector<int>> out;
  std::vector<int> chosen;
  enumerate_rec(edge_set, 0, UnionFind(edge_set.node_count()), chosen, out);
  return out;
}

double brute_force_omega(const EdgeSet& edge_set, const Vector& w) {
  double omega = 0.0;
  for (const auto& tree : enumerate_spanning_trees(edge_set)) {
    double prod = 1.0;
    for (int e : tree) prod *= w[e];
    omega += prod;
  }
  return omega;
}

OracleResult projected_gradient_solve(const EdgeSet& edge_set, double tol,
                                      int max_iterations) {
  const int m = edge_set.edge_count();
  const int n = edge_set.node_count();

  Vector h(m);
  for (int e = 0; e < m; ++e) h[e] = edge_set.cost(e);

  // Full-support start: feasible, connected, and independent of the
  // coordinate solver's tree initialization.
  Vector w = h.cwiseInverse();

  auto objective_at = [&](const Vector& candidate) -> double {
    const auto logdet = spd_log_det(strengthened_of(edge_set, candidate));
    if (!logdet) return std::numeric_limits<double>::infinity();
    return -*logdet + h.dot(candidate);
  };

  double f = objective_at(w);
  double step = 1.0;
  Vector grad(m), trial(m);
  int stalled = 0;
  double residual = std::numeric_limits<double>::infinity();
  int iter = 0;

  for (; iter < max_iterations; ++iter) {
    // Gradient h_e - r_e from a fresh dense inverse.
    Eigen::LLT<Matrix> llt(strengthened_of(edge_set, w));
    if (llt.info() != Eigen::Success) {
      throw Error("projected gradient iterate lost connectivity");  // not reachable from a feasible path
    }
    const Matrix sigma = llt.solve(Matrix::Identity(n, n));
    for (int e = 0; e < m; ++e) {
      const Edge& ed = edge_set.edge(e);
      const double r = sigma(ed.i, ed.i) + sigma(ed.j, ed.j) - 2.0 * sigma(ed.i, ed.j);
      grad[e] = h[e] - r;
    }

    // Unit-step projected-gradient residual.
    residual = 0.0;
    for (int e = 0; e < m; ++e) {
      residual = std::max(residual, std::abs(w[e] - std::max(0.0, w[e] - grad[e])));
    }
    if (residual <= tol) break;

    // Armijo backtracking: accept F(w+) <= F(w) + 0.5 g^T (w+ - w).
    bool accepted = false;
    double f_trial = f;
    while (step > 1e-18) {
      trial = (w - step * grad).cwiseMax(0.0);
      f_trial = objective_at(trial);
      const double model = grad.dot(trial - w);
      if (f_trial <= f + 0.5 * model) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      throw Error("projected gradient line search failed (step underflow)");
    }

    const bool no_progress = f - f_trial < 1e-16 * (1.0 + std::abs(f));
    w = trial;
    f = f_trial;
    if (no_progress) {
      if (++stalled >= 25) break;  // progress at roundoff floor
    } else {
      stalled = 0;
    }
    step *= 2.0;
  }

  OracleResult result;
  result.w = w;
  result.objective = f;
  result.iterations = iter;
  result.stationarity = residual;
  return result;
}

}  // namespace comblap
