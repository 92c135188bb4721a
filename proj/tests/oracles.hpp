#pragma once

// Test-only reference computations. Each one is deliberately naive and shares
// no code path with the library routine it checks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;

inline std::int64_t mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

inline std::int64_t weighted(const Vec& v) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += static_cast<std::int64_t>(i) * v[i];
  return s;
}

/// Every vector in [0, bound]^len via an odometer.
inline void odometer(std::size_t len, std::int64_t bound, const std::function<void(const Vec&)>& f) {
  Vec v(len, 0);
  for (;;) {
    f(v);
    std::size_t i = 0;
    while (i < len && v[i] == bound) v[i++] = 0;
    if (i == len) return;
    ++v[i];
  }
}

/// S(n) by filtering the full box [0, n]^n, sorted descending.
inline std::vector<Vec> generators(std::int64_t n) {
  std::vector<Vec> out;
  odometer(static_cast<std::size_t>(n), n, [&](const Vec& v) {
    if (std::accumulate(v.begin(), v.end(), std::int64_t{0}) == n && mod(weighted(v), n) == 0) out.push_back(v);
  });
  std::sort(out.begin(), out.end(), std::greater<>{});
  return out;
}

/// Fraction-free Gaussian elimination (Bareiss) determinant.
inline __int128 determinant(std::vector<std::vector<__int128>> a) {
  const std::size_t n = a.size();
  __int128 sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Does some n-subset sum to 0 mod n? Bitmask scan over all subsets.
inline bool zero_sum_exists(std::int64_t n, const Vec& a) {
  const std::size_t m = a.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (__builtin_popcountll(mask) != n) continue;
    std::int64_t s = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) s += a[i];
    }
    if (mod(s, n) == 0) return true;
  }
  return false;
}

/// Nondecreasing sequences of length len over [0, n): one per multiset.
inline void multisets(std::int64_t n, std::size_t len, const std::function<void(const Vec&)>& f) {
  Vec v(len, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t lo) {
    if (i == len) {
      f(v);
      return;
    }
    for (std::int64_t x = lo; x < n; ++x) {
      v[i] = x;
      rec(i + 1, x);
    }
  };
  rec(0, 0);
}

}  // namespace oracle
