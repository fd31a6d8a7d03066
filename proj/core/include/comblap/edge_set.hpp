#pragma once

#include <vector>

#include "comblap/errors.hpp"

namespace comblap {

/// Undirected edge with canonical endpoint order i < j. No self loops.
struct Edge {
  int i = 0;
  int j = 0;

  Edge() = default;
  Edge(int a, int b);

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Candidate topology: node count, unique undirected edges, and the
/// positive per-edge inclusion cost h_e. Edge order is part of the value
/// (the cyclic selection rule and tie-breaks depend on it).
class EdgeSet {
 public:
  EdgeSet(int n, std::vector<Edge> edges, std::vector<double> costs);

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<double>& costs() const { return costs_; }

  const Edge& edge(int e) const { return edges_[e]; }
  double cost(int e) const { return costs_[e]; }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<double> costs_;
};

}  // namespace comblap
