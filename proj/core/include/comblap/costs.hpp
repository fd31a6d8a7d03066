#pragma once

#include <Eigen/Dense>
#include <optional>

#include "comblap/errors.hpp"
#include "comblap/graph_state.hpp"

namespace comblap {

// Data matrix X is n x N: row k is the feature vector of node k, column k is
// a graph signal.

enum class CostFamily { gmrf, lp_variation, gaussian_kernel };

struct CostConfig {
  CostFamily family = CostFamily::gaussian_kernel;
  double alpha = 0.0;            // gmrf: h = alpha + mean squared gap
  double p = 2.0;                // lp_variation exponent
  std::optional<double> sigma;   // gaussian_kernel bandwidth; unset -> median heuristic
};

/// h_ij = alpha + (1/N) sum_k (x_ik - x_jk)^2.
Matrix gmrf_cost(const Matrix& X, double alpha);

/// h_ij = (1/N) sum_k |x_ik - x_jk|^p, p > 0.
Matrix lp_variation_cost(const Matrix& X, double p);

/// h_ij = exp(||x_i - x_j||^2 / sigma^2).
///
/// Note the positive exponent: this is a cost that grows with feature
/// distance, the inverse convention of the usual exp(-d^2/sigma^2)
/// similarity kernel.
Matrix gaussian_kernel_cost(const Matrix& X, double sigma);

/// Median of the n(n-1)/2 pairwise Euclidean row distances; the default
/// gaussian_kernel bandwidth when sigma is unset. Keeps exponents O(1).
double median_pairwise_distance(const Matrix& X);

/// Full symmetric cost table for the configured family (diagonal zero,
/// never consumed). Resolves an unset gaussian sigma via the median
/// heuristic and records the value back into a copy of the config.
Matrix cost_table(const Matrix& X, const CostConfig& config);

/// Row i of the cost table, for O(n) streaming consumers. sigma must be
/// resolved by the caller for the gaussian family.
void cost_row(const Matrix& X, const CostConfig& config, int i, Vector& out);

/// Copy of config with gaussian sigma resolved (median heuristic if unset).
CostConfig resolve_sigma(const Matrix& X, const CostConfig& config);

}  // namespace comblap
