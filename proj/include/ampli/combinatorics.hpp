#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ampli {

/// C(n, k), zero when k < 0 or k > n (including negative n).
inline std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// All k-subsets of {0, ..., n-1} in lexicographic order.
inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> s(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i;
  for (;;) {
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++s[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

/// Representative of i modulo n in 1..n.
inline int cyc(int i, int n) { return ((i - 1) % n + n) % n + 1; }

/// Cyclic distance between 1-based indices.
inline int cyclic_distance(int a, int b, int n) {
  const int d = ((a - b) % n + n) % n;
  return d < n - d ? d : n - d;
}

}  // namespace ampli
