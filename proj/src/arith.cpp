#include "egzkit/arith.hpp"

#include <algorithm>

namespace egzkit {

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // r = C(n - k + i, i) after step i; each step is an exact division.
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r >= cap) return cap;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace egzkit
