#pragma once

/**
 * @file lattice.hpp
 * @brief The weight homomorphism Z^n -> Z/n + Z/n, its kernel lattice, and
 * the explicit basis of that kernel.
 *
 * phi(x) = (sum x_i mod n, sum i*x_i mod n). Its kernel N is a sublattice of
 * index n^2 with basis
 *
 *   u_r     = e_r + (r+1) e_{n-2} + (n-r-2) e_{n-1},   0 <= r <= n-3
 *   u_{n-2} = n e_{n-2}
 *   u_{n-1} = n e_{n-1}
 *
 * The index is certified independently via Smith normal form.
 */

#include <cstdint>
#include <span>
#include <vector>

#include "egzkit/int_vec.hpp"

namespace egzkit {

/// Value of phi in Z/n + Z/n, both components in [0, n).
struct PhiImage {
  std::int64_t sum_class = 0;
  std::int64_t weighted_class = 0;

  friend bool operator==(const PhiImage&, const PhiImage&) = default;
};

/// n rows of length n with nonzero determinant.
class LatticeBasis {
 public:
  /// Throws PreconditionError if the rows are not n vectors of length n.
  /// Independence is checked by lattice_index, not here.
  LatticeBasis(std::int64_t modulus, std::vector<IntVec> rows);

  static LatticeBasis identity(std::int64_t n);

  std::int64_t modulus() const { return modulus_; }
  const std::vector<IntVec>& rows() const { return rows_; }

  /// sum_i coeffs[i] * rows[i]
  IntVec combine(std::span<const std::int64_t> coeffs) const;

 private:
  std::int64_t modulus_;
  std::vector<IntVec> rows_;
};

struct SnfReport {
  std::vector<std::int64_t> diagonal;  // d_1 | d_2 | ... | d_n, all >= 0
  std::int64_t index = 0;              // product of diagonal
};

PhiImage phi(const IntVec& x);
bool in_kernel(const IntVec& x);

/// Throws DomainError for n < 2.
LatticeBasis u_basis(std::int64_t n);

/// Smith normal form of an arbitrary integer matrix (rows x cols, row-major).
/// Pivots on the entry of least absolute value. Returns the min(rows, cols)
/// invariant factors, nonnegative, in divisibility order.
std::vector<std::int64_t> smith_diagonal(std::vector<std::vector<std::int64_t>> matrix);

/// Index of the row lattice in Z^n. Throws DegenerateBasisError when
/// singular.
SnfReport lattice_index(const LatticeBasis& basis);

/// Coordinates of a kernel vector in the u-basis. The first n-2 coordinates
/// are copied; the last two come from exact divisions by n. Throws
/// PreconditionError (naming the failing phi component) off the kernel, and
/// DomainError for n < 2.
std::vector<std::int64_t> to_u_coordinates(const IntVec& x);

}  // namespace egzkit
