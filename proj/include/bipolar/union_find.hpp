#pragma once

#include <numeric>
#include <vector>

namespace bipolar {

class UnionFind {
 public:
  explicit UnionFind(int n = 0) : parent_(n), classes_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int add() {
    parent_.push_back(static_cast<int>(parent_.size()));
    ++classes_;
    return parent_.back();
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // The smaller root wins, so roots are always least members.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    --classes_;
    return true;
  }

  bool same(int a, int b) { return find(a) == find(b); }
  int size() const { return static_cast<int>(parent_.size()); }
  int classes() const { return classes_; }

 private:
  std::vector<int> parent_;
  int classes_;
};

}  // namespace bipolar
