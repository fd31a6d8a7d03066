#include "comblap/synthetic.hpp"

#include <random>

#include "comblap/errors.hpp"

namespace comblap {

Matrix clustered_gaussians(int n, int clusters, int dim, std::uint64_t seed) {
  if (n < 2 || clusters < 1 || dim < 1) {
    throw InputError("demo data needs n >= 2, clusters >= 1, dim >= 1");
  }
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> unit(0.0, 1.0);

  // Cluster c sits at 3.0 * e_{c mod dim}: separated enough that costs show
  // clear cluster structure, overlapping enough that small-K neighbor graphs
  // stay connected. Centers repeat axes when clusters > dim. Rows come out
  // cluster-major, the way class-sampled datasets are usually ordered.
  Matrix X(n, dim);
  for (int row = 0; row < n; ++row) {
    const int c = static_cast<int>((static_cast<long long>(row) * clusters) / n);
    for (int d = 0; d < dim; ++d) X(row, d) = unit(engine);
    X(row, c % dim) += 3.0;
  }
  return X;
}

}  // namespace comblap
