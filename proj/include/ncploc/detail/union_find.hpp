#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace ncploc::detail {

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[y < x ? x : y] = y < x ? y : x;
  }

  bool same(std::size_t x, std::size_t y) { return find(x) == find(y); }
};

}  // namespace ncploc::detail
