#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "comblap/edge_set.hpp"
#include "comblap/graph_state.hpp"
#include "comblap/resistance.hpp"

namespace comblap {

/// Weights at or below this are reported as inactive (zero). The coordinate
/// update clamps to exact zero, so this only guards drift.
inline constexpr double kActiveWeightEps = 1e-12;

enum class SelectionKind { cyclic, random, pgs };

struct SelectionRule {
  SelectionKind kind = SelectionKind::cyclic;
  std::uint64_t seed = 0;  // random rule only; fixed seed => deterministic run
};

enum class IterateValidation { none, per_epoch, per_update };

struct SolverConfig {
  SelectionRule rule;
  double tol = 1e-10;                // per-epoch objective decrease threshold
  int max_epochs = 1000;
  int refresh_update_factor = 5;     // refresh Sigma every factor*m applied updates...
  int refresh_epoch_interval = 10;   // ...or after this many epochs, whichever first
  bool record_iterations = false;
  IterateValidation validate_iterates = IterateValidation::none;
};

enum class SolveStatus { converged, max_epochs };

struct IterationRecord {
  int edge;
  double delta;
  double delta_objective;
};

struct EpochStats {
  double objective;  // F at epoch end
  double wall_ms;
  int updates;       // rank-one updates applied (delta != 0)
};

struct SolverTrace {
  std::vector<EpochStats> epochs;
  std::vector<IterationRecord> iterations;  // only when record_iterations
  SolveStatus status = SolveStatus::converged;
  // Final diagnostics.
  int m_active = 0;
  double log_det = 0.0;
  double sum_hw = 0.0;
};

struct SolveResult {
  GraphState state;   // final weights, exact L and Q
  SigmaMatrix sigma;  // freshly factorized at exit
  SolverTrace trace;
};

/// Exact single-coordinate minimizer of F: w' = max(0, w + 1/h - 1/r).
/// At r = h the weight is a fixed point.
inline double coordinate_update(double w, double h, double r) {
  return std::max(0.0, w + 1.0 / h - 1.0 / r);
}

/// Objective change of the update w_e += delta: -log(1 + delta r_e) + delta h_e.
/// Nonpositive for every delta produced by coordinate_update.
inline double objective_delta(double delta, double r, double h) {
  return -std::log1p(delta * r) + delta * h;
}

/// Edge selection for the coordinate loop.
///  - cyclic: fixed round-robin over the edge order, O(1).
///  - random: uniform over edges from the seeded generator, O(1).
///  - pgs:    proximal-gradient Gauss-Southwell, the edge whose closed-form
///            update moves its weight the most; ties to the smaller index. O(m).
class EdgeSelector {
 public:
  EdgeSelector(SelectionRule rule, int edge_count)
      : rule_(rule), edge_count_(edge_count), engine_(rule.seed) {}

  int next(const EdgeSet& edge_set, const Vector& w, const SigmaMatrix& sigma) {
    switch (rule_.kind) {
      case SelectionKind::cyclic: {
        const int e = cursor_;
        cursor_ = (cursor_ + 1) % edge_count_;
        return e;
      }
      case SelectionKind::random:
        return std::uniform_int_distribution<int>(0, edge_count_ - 1)(engine_);
      case SelectionKind::pgs: {
        int best = 0;
        double best_move = -1.0;
        for (int e = 0; e < edge_count_; ++e) {
          const double r = sigma.resistance(edge_set.edge(e));
          const double move = std::abs(coordinate_update(w[e], edge_set.cost(e), r) - w[e]);
          if (move > best_move) {
            best_move = move;
            best = e;
          }
        }
        return best;
      }
    }
    return 0;
  }

 private:
  SelectionRule rule_;
  int edge_count_;
  int cursor_ = 0;
  std::mt19937_64 engine_;
};

/// Coordinate-minimization solve of
///   min -log det(Q) + sum_e h_e w_e   s.t.  w >= 0, support(w) in edge_set.
/// Starts from the F-optimal spanning tree, keeps every iterate connected,
/// and stops when the objective decrease over one epoch (m iterations) falls
/// below config.tol.
SolveResult solve(const EdgeSet& edge_set, const SolverConfig& config);

}  // namespace comblap
