#pragma once

// Overflow-checked 64-bit helpers. Every helper throws OverflowError instead
// of wrapping.

#include <cstdint>
#include <string>

#include "egzkit/errors.hpp"

namespace egzkit {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
  }
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

inline std::int64_t checked_abs(std::int64_t a) { return a < 0 ? checked_neg(a) : a; }

/// Representative of a mod n in [0, n). Requires n > 0.
inline std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

/// (a * b) mod n in [0, n) without intermediate overflow.
inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
  const __int128 p = static_cast<__int128>(a) * static_cast<__int128>(b);
  auto r = static_cast<std::int64_t>(p % n);
  return r < 0 ? r + n : r;
}

/// Floor division; requires b != 0.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Binomial coefficient C(n, k), saturating at `cap` (returns cap when the
/// true value is >= cap). Used to size enumerations before running them.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap);

}  // namespace egzkit
