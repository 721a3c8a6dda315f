#pragma once

// Exact integer combinatorics used by the class-counting formulas. Values
// at the sizes handled here (n <= 8) fit comfortably in 64 bits; negative
// intermediate results never occur because every formula is a sum of
// products of nonnegative terms.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace vgreen {

using count_t = std::int64_t;

inline count_t binomial(count_t n, count_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  count_t r = 1;
  for (count_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// [p]_k = p (p-1) ... (p-k+1); [p]_0 = 1.
inline count_t falling_factorial(count_t p, count_t k) {
  count_t r = 1;
  for (count_t i = 0; i < k; ++i) r *= (p - i);
  return r;
}

inline count_t factorial(count_t k) { return falling_factorial(k, k); }

inline count_t ipow(count_t base, count_t exp) {
  count_t r = 1;
  for (count_t i = 0; i < exp; ++i) r *= base;
  return r;
}

// Stirling number of the second kind via
// S(q,k) = k S(q-1,k) + S(q-1,k-1), S(0,0) = 1.
inline count_t stirling2(count_t q, count_t k) {
  if (q < 0 || k < 0 || k > q) return 0;
  std::vector<count_t> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;  // S(0,0)
  for (count_t i = 1; i <= q; ++i) {
    auto top = static_cast<std::size_t>(std::min(i, k));
    for (std::size_t j = top; j >= 1; --j) {
      row[j] = static_cast<count_t>(j) * row[j] + row[j - 1];
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

// e_m(values): sum over all m-subsets of the product of their entries.
inline count_t elementary_symmetric(std::span<const count_t> values,
                                    std::size_t m) {
  std::vector<count_t> e(m + 1, 0);
  e[0] = 1;
  for (auto v : values) {
    for (std::size_t j = m; j >= 1; --j) e[j] += e[j - 1] * v;
  }
  return e[m];
}

}  // namespace vgreen
