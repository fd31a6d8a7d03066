#pragma once

#include <numeric>
#include <vector>

namespace comblap {

/// Disjoint-set forest with union by size and path halving.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns false if x and y were already in the same set.
  bool unite(int x, int y) {
    int rx = find(x);
    int ry = find(y);
    if (rx == ry) return false;
    if (size_[rx] < size_[ry]) std::swap(rx, ry);
    parent_[ry] = rx;
    size_[rx] += size_[ry];
    --components_;
    return true;
  }

  bool connected(int x, int y) { return find(x) == find(y); }
  int component_count() const { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int components_;
};

}  // namespace comblap
