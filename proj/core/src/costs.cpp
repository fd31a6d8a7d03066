#include "comblap/costs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace comblap {

namespace {

// exp overflows past log(DBL_MAX) ~ 709.78.
constexpr double kMaxExponent = 709.0;

void check_data(const Matrix& X) {
  if (X.rows() < 2 || X.cols() < 1) {
    throw InputError("data matrix must have n >= 2 rows and N >= 1 columns, got " +
                     std::to_string(X.rows()) + "x" + std::to_string(X.cols()));
  }
  if (!X.allFinite()) {
    throw InputError("data matrix contains non-finite entries");
  }
}

double gaussian_entry(const Matrix& X, int i, int j, double inv_sigma2) {
  const double d2 = (X.row(i) - X.row(j)).squaredNorm();
  const double exponent = d2 * inv_sigma2;
  if (exponent > kMaxExponent) {
    throw InputError("cost overflow: increase sigma (exponent " +
                     std::to_string(exponent) + " exceeds double range)");
  }
  return std::exp(exponent);
}

}  // namespace

Matrix gmrf_cost(const Matrix& X, double alpha) {
  check_data(X);
  if (alpha < 0.0) throw InputError("gmrf alpha must be >= 0");
  const int n = static_cast<int>(X.rows());
  const double inv_N = 1.0 / static_cast<double>(X.cols());
  Matrix H = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double h = alpha + (X.row(i) - X.row(j)).squaredNorm() * inv_N;
      H(i, j) = h;
      H(j, i) = h;
    }
  }
  return H;
}

Matrix lp_variation_cost(const Matrix& X, double p) {
  check_data(X);
  if (!(p > 0.0)) throw InputError("lp variation exponent p must be > 0");
  const int n = static_cast<int>(X.rows());
  const double inv_N = 1.0 / static_cast<double>(X.cols());
  Matrix H = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double h;
      if (p == 2.0) {
        h = (X.row(i) - X.row(j)).squaredNorm() * inv_N;
      } else if (p == 1.0) {
        h = (X.row(i) - X.row(j)).cwiseAbs().sum() * inv_N;
      } else {
        h = (X.row(i) - X.row(j)).cwiseAbs().array().pow(p).sum() * inv_N;
      }
      H(i, j) = h;
      H(j, i) = h;
    }
  }
  return H;
}

Matrix gaussian_kernel_cost(const Matrix& X, double sigma) {
  check_data(X);
  if (!(sigma > 0.0)) throw InputError("gaussian sigma must be > 0");
  const int n = static_cast<int>(X.rows());
  const double inv_sigma2 = 1.0 / (sigma * sigma);
  Matrix H = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double h = gaussian_entry(X, i, j, inv_sigma2);
      H(i, j) = h;
      H(j, i) = h;
    }
  }
  return H;
}

double median_pairwise_distance(const Matrix& X) {
  check_data(X);
  const int n = static_cast<int>(X.rows());
  std::vector<double> dists;
  dists.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      dists.push_back((X.row(i) - X.row(j)).norm());
    }
  }
  const std::size_t mid = dists.size() / 2;
  std::nth_element(dists.begin(), dists.begin() + mid, dists.end());
  const double med = dists[mid];
  if (!(med > 0.0)) {
    throw InputError(
        "median pairwise distance is zero; data too degenerate for the median "
        "sigma heuristic, pass --sigma explicitly");
  }
  return med;
}

CostConfig resolve_sigma(const Matrix& X, const CostConfig& config) {
  CostConfig out = config;
  if (out.family == CostFamily::gaussian_kernel && !out.sigma) {
    out.sigma = median_pairwise_distance(X);
  }
  return out;
}

Matrix cost_table(const Matrix& X, const CostConfig& config) {
  switch (config.family) {
    case CostFamily::gmrf:
      return gmrf_cost(X, config.alpha);
    case CostFamily::lp_variation:
      return lp_variation_cost(X, config.p);
    case CostFamily::gaussian_kernel: {
      const CostConfig resolved = resolve_sigma(X, config);
      return gaussian_kernel_cost(X, *resolved.sigma);
    }
  }
  throw InputError("unknown cost family");
}

void cost_row(const Matrix& X, const CostConfig& config, int i, Vector& out) {
  check_data(X);
  const int n = static_cast<int>(X.rows());
  if (i < 0 || i >= n) throw InputError("cost_row index out of range");
  out.resize(n);
  out[i] = 0.0;
  const double inv_N = 1.0 / static_cast<double>(X.cols());
  switch (config.family) {
    case CostFamily::gmrf:
      for (int j = 0; j < n; ++j) {
        if (j != i) out[j] = config.alpha + (X.row(i) - X.row(j)).squaredNorm() * inv_N;
      }
      return;
    case CostFamily::lp_variation:
      for (int j = 0; j < n; ++j) {
        if (j != i)
          out[j] = (X.row(i) - X.row(j)).cwiseAbs().array().pow(config.p).sum() * inv_N;
      }
      return;
    case CostFamily::gaussian_kernel: {
      if (!config.sigma) throw InputError("cost_row needs a resolved sigma");
      const double inv_sigma2 = 1.0 / (*config.sigma * *config.sigma);
      for (int j = 0; j < n; ++j) {
        if (j != i) out[j] = gaussian_entry(X, i, j, inv_sigma2);
      }
      return;
    }
  }
  throw InputError("unknown cost family");
}

}  // namespace comblap
