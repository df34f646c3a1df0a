#pragma once

#include <numeric>
#include <vector>

namespace hocat {

/// Disjoint sets whose class representative is always the least member.
/// Deterministic representatives make quotient naming reproducible.
class UnionFind {
 public:
  explicit UnionFind(int n = 0) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int add() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }

  int find(int x) {
    int root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      int next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  /// Returns true if the classes were distinct.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  int size() const { return static_cast<int>(parent_.size()); }

  /// Dense class index per element, numbered by first occurrence.
  std::vector<int> classes(int* count = nullptr) {
    std::vector<int> index(parent_.size(), -1);
    std::vector<int> out(parent_.size());
    int next = 0;
    for (int i = 0; i < size(); ++i) {
      int r = find(i);
      if (index[r] < 0) index[r] = next++;
      out[i] = index[r];
    }
    if (count) *count = next;
    return out;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace hocat
