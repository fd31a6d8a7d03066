#include "comblap/edge_set.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

namespace comblap {

Edge::Edge(int a, int b) {
  if (a == b) {
    throw InputError("self loop (" + std::to_string(a) + "," + std::to_string(b) +
                     ") is not a valid edge");
  }
  i = std::min(a, b);
  j = std::max(a, b);
}

EdgeSet::EdgeSet(int n, std::vector<Edge> edges, std::vector<double> costs)
    : n_(n), edges_(std::move(edges)), costs_(std::move(costs)) {
  if (n_ < 2) {
    throw InputError("edge set needs at least 2 nodes, got " + std::to_string(n_));
  }
  if (edges_.size() != costs_.size()) {
    throw InputError("edge/cost size mismatch: " + std::to_string(edges_.size()) +
                     " edges vs " + std::to_string(costs_.size()) + " costs");
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.i < 0 || ed.j >= n_ || ed.i >= ed.j) {
      throw InputError("edge (" + std::to_string(ed.i) + "," + std::to_string(ed.j) +
                       ") out of range for n=" + std::to_string(n_));
    }
    const double h = costs_[e];
    if (!std::isfinite(h) || h <= 0.0) {
      throw InputError(
          "edge (" + std::to_string(ed.i) + "," + std::to_string(ed.j) +
          ") has non-positive cost h=" + std::to_string(h) +
          "; costs must be > 0 (set alpha > 0 or deduplicate identical feature rows)");
    }
  }
  // Each unordered pair may appear at most once.
  std::vector<std::int64_t> keys(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    keys[e] = static_cast<std::int64_t>(edges_[e].i) * n_ + edges_[e].j;
  }
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
    throw InputError("duplicate edge in edge set");
  }
}

}  // namespace comblap
