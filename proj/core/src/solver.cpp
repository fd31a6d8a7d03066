#include "comblap/solver.hpp"

#include <chrono>
#include <stdexcept>

#include "comblap/spanning_tree.hpp"
#include "comblap/topology.hpp"

namespace comblap {

namespace {

double linear_term(const EdgeSet& edge_set, const Vector& w) {
  double s = 0.0;
  for (int e = 0; e < edge_set.edge_count(); ++e) s += edge_set.cost(e) * w[e];
  return s;
}

void check_iterate(const EdgeSet& edge_set, const Vector& w) {
  for (int e = 0; e < edge_set.edge_count(); ++e) {
    if (!(w[e] >= 0.0)) throw std::logic_error("solver iterate has negative weight");
  }
  if (!is_connected_support(edge_set, w)) {
    throw std::logic_error("solver iterate lost connectivity");
  }
}

}  // namespace

SolveResult solve(const EdgeSet& edge_set, const SolverConfig& config) {
  if (config.max_epochs < 1) throw InputError("max_epochs must be >= 1");
  if (!(config.tol > 0.0)) throw InputError("tol must be > 0");
  validate_connected(edge_set);

  const int m = edge_set.edge_count();
  const std::int64_t refresh_updates =
      static_cast<std::int64_t>(config.refresh_update_factor) * m;

  TreeInit init = mst_initialize(edge_set);
  Vector w = init.w0;

  SigmaMatrix sigma = SigmaMatrix::from_strengthened(build_strengthened(edge_set, w));
  double objective_value = -sigma.log_det() + linear_term(edge_set, w);

  auto refresh = [&]() {
    sigma.refresh(build_strengthened(edge_set, w));
    objective_value = -sigma.log_det() + linear_term(edge_set, w);
  };

  EdgeSelector selector(config.rule, m);
  SolverTrace trace;
  trace.status = SolveStatus::max_epochs;
  if (config.record_iterations) trace.iterations.reserve(static_cast<std::size_t>(m) * 8);

  int epochs_since_refresh = 0;
  for (int epoch = 0; epoch < config.max_epochs; ++epoch) {
    const auto t0 = std::chrono::steady_clock::now();
    const double epoch_start_objective = objective_value;
    int updates_this_epoch = 0;

    for (int it = 0; it < m; ++it) {
      const int e = selector.next(edge_set, w, sigma);
      const Edge& edge = edge_set.edge(e);
      const double h = edge_set.cost(e);
      const double r = sigma.resistance(edge);
      const double w_new = coordinate_update(w[e], h, r);
      const double delta = w_new - w[e];

      double df = 0.0;
      if (delta != 0.0) {
        df = objective_delta(delta, r, h);
        sigma.rank_one_update(edge, delta);
        w[e] = w_new;
        objective_value += df;
        ++updates_this_epoch;
        if (sigma.updates_since_refresh() >= refresh_updates) {
          refresh();
          epochs_since_refresh = 0;
        }
      }
      if (config.record_iterations) trace.iterations.push_back({e, delta, df});
      if (config.validate_iterates == IterateValidation::per_update) {
        check_iterate(edge_set, w);
      }
    }

    ++epochs_since_refresh;
    if (epochs_since_refresh >= config.refresh_epoch_interval) {
      refresh();
      epochs_since_refresh = 0;
    }
    if (config.validate_iterates == IterateValidation::per_epoch) {
      check_iterate(edge_set, w);
    }

    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    trace.epochs.push_back({objective_value, wall_ms, updates_this_epoch});

    if (epoch_start_objective - objective_value < config.tol) {
      trace.status = SolveStatus::converged;
      break;
    }
  }

  // Exit with exact state: rebuild Q from the weights and refactorize, so the
  // returned Sigma, resistances and diagnostics carry no update drift.
  refresh();
  trace.m_active = 0;
  for (int e = 0; e < m; ++e) {
    if (w[e] > kActiveWeightEps) ++trace.m_active;
  }
  trace.log_det = sigma.log_det();
  trace.sum_hw = linear_term(edge_set, w);

  return SolveResult{build_laplacian(edge_set, w), std::move(sigma), std::move(trace)};
}

}  // namespace comblap
