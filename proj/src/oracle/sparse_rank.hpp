#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "binedge/algebra/coefficients.hpp"

namespace binedge::oracle::detail {

template <class K>
using Sparse = std::vector<std::pair<std::uint32_t, K>>;

// a - c * b, both sorted by index.
template <class K>
Sparse<K> subtract_multiple(const Sparse<K>& a, const K& c, const Sparse<K>& b) {
  Sparse<K> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(c * b[j].second));
      ++j;
    } else {
      K v = a[i].second - c * b[j].second;
      if (!algebra::is_zero(v)) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

// Rank of the matrix whose columns are given, over K. Pivots are indexed by
// their smallest row and kept monic.
template <class K>
long long sparse_rank(std::vector<Sparse<K>> columns, std::uint32_t rows) {
  std::vector<int> pivot_of(rows, -1);
  std::vector<Sparse<K>> pivots;
  for (auto& col : columns) {
    while (!col.empty()) {
      std::uint32_t lead = col.front().first;
      int p = pivot_of[lead];
      if (p < 0) {
        K inv = algebra::inverse(col.front().second);
        for (auto& [r, v] : col) v = v * inv;
        pivot_of[lead] = static_cast<int>(pivots.size());
        pivots.push_back(std::move(col));
        break;
      }
      K c = col.front().second;
      col = subtract_multiple(col, c, pivots[p]);
    }
  }
  return static_cast<long long>(pivots.size());
}

}  // namespace binedge::oracle::detail
