#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace lefkit {

// Basis of a 2^n-dimensional space indexed by subsets of {0..n-1}, ordered by
// size then lexicographically on the sorted element lists.
struct SubsetBasis {
  int n = 0;
  std::vector<std::vector<int>> sets;
  std::map<std::vector<int>, int> index;

  static SubsetBasis make(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("subset basis size out of range");
    SubsetBasis b;
    b.n = n;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) s.push_back(i);
      b.sets.push_back(std::move(s));
    }
    std::sort(b.sets.begin(), b.sets.end(), [](const auto& a, const auto& c) {
      if (a.size() != c.size()) return a.size() < c.size();
      return a < c;
    });
    for (int i = 0; i < int(b.sets.size()); ++i) b.index[b.sets[size_t(i)]] = i;
    return b;
  }

  int at(const std::vector<int>& s) const { return index.at(s); }
};

// Sign of sorting the concatenation (a, b) of two disjoint sorted lists:
// (-1)^{#inversions}. Returns 0 if the lists intersect.
inline int merge_sign(const std::vector<int>& a, const std::vector<int>& b) {
  long inversions = 0;
  for (int x : a)
    for (int y : b) {
      if (x == y) return 0;
      if (x > y) ++inversions;
    }
  return inversions % 2 == 0 ? 1 : -1;
}

// Sorted union of two disjoint sorted lists.
inline std::vector<int> merge_sets(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace lefkit
