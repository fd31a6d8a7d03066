#include "comblap/topology.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace comblap {

namespace {

void check_table(const Matrix& H) {
  if (H.rows() != H.cols() || H.rows() < 2) {
    throw InputError("cost table must be square with n >= 2");
  }
}

}  // namespace

EdgeSet complete_edge_set(const Matrix& cost_table) {
  check_table(cost_table);
  const int n = static_cast<int>(cost_table.rows());
  std::vector<Edge> edges;
  std::vector<double> costs;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  costs.reserve(edges.capacity());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      edges.emplace_back(i, j);
      costs.push_back(cost_table(i, j));
    }
  }
  return EdgeSet(n, std::move(edges), std::move(costs));
}

EdgeSet knn_edge_set(const Matrix& cost_table, int k) {
  check_table(cost_table);
  const int n = static_cast<int>(cost_table.rows());
  if (k < 1 || k > n - 1) {
    throw InputError("knn K must satisfy 1 <= K <= n-1, got K=" + std::to_string(k));
  }

  // keep[i*n+j] marks j as one of i's K cheapest partners.
  std::vector<char> keep(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> order(n - 1);
  for (int i = 0; i < n; ++i) {
    int pos = 0;
    for (int j = 0; j < n; ++j) {
      if (j != i) order[pos++] = j;
    }
    // Ascending cost, ties toward the smaller node index.
    std::partial_sort(order.begin(), order.begin() + k, order.end(),
                      [&](int a, int b) {
                        const double ha = cost_table(i, a);
                        const double hb = cost_table(i, b);
                        if (ha != hb) return ha < hb;
                        return a < b;
                      });
    for (int t = 0; t < k; ++t) keep[static_cast<std::size_t>(i) * n + order[t]] = 1;
  }

  std::vector<Edge> edges;
  std::vector<double> costs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (keep[static_cast<std::size_t>(i) * n + j] ||
          keep[static_cast<std::size_t>(j) * n + i]) {
        edges.emplace_back(i, j);
        costs.push_back(cost_table(i, j));
      }
    }
  }
  return EdgeSet(n, std::move(edges), std::move(costs));
}

void validate_connected(const EdgeSet& edge_set) {
  auto components = support_components(edge_set);
  if (components.size() <= 1) return;
  std::string msg = "candidate topology disconnected: increase K or supply more edges (" +
                    std::to_string(components.size()) + " components, sizes";
  for (const auto& c : components) msg += " " + std::to_string(c.size());
  msg += ")";
  throw DisconnectedError(msg, std::move(components));
}

}  // namespace comblap
