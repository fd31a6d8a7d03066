#pragma once

#include <cstdint>

#include "comblap/graph_state.hpp"

namespace comblap {

/// Clustered-Gaussian demo data: n points in `dim` dimensions drawn from
/// `clusters` unit-variance Gaussians whose centers are spread well apart.
/// Rows are assigned to clusters round-robin; fully deterministic in the
/// seed. Stands in for real feature datasets at desk scale.
Matrix clustered_gaussians(int n, int clusters, int dim, std::uint64_t seed);

}  // namespace comblap
