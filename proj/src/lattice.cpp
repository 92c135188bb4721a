#include "egzkit/lattice.hpp"

#include <cstdlib>
#include <utility>

#include "egzkit/arith.hpp"
#include "egzkit/errors.hpp"

namespace egzkit {

LatticeBasis::LatticeBasis(std::int64_t modulus, std::vector<IntVec> rows)
    : modulus_(modulus), rows_(std::move(rows)) {
  if (rows_.size() != static_cast<std::size_t>(modulus_)) {
    throw PreconditionError("basis needs " + std::to_string(modulus_) + " rows, got " +
                            std::to_string(rows_.size()));
  }
  for (const auto& r : rows_) {
    if (r.modulus() != modulus_) throw PreconditionError("basis row has wrong length");
  }
}

LatticeBasis LatticeBasis::identity(std::int64_t n) {
  std::vector<IntVec> rows;
  for (std::int64_t i = 0; i < n; ++i) rows.push_back(IntVec::unit(n, static_cast<std::size_t>(i)));
  return LatticeBasis(n, std::move(rows));
}

IntVec LatticeBasis::combine(std::span<const std::int64_t> coeffs) const {
  if (coeffs.size() != rows_.size()) throw PreconditionError("coefficient count does not match basis");
  IntVec acc(modulus_);
  for (std::size_t i = 0; i < rows_.size(); ++i) acc += coeffs[i] * rows_[i];
  return acc;
}

PhiImage phi(const IntVec& x) {
  const std::int64_t n = x.modulus();
  std::int64_t s = 0;
  std::int64_t w = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::int64_t r = floor_mod(x[i], n);
    s = floor_mod(s + r, n);
    w = floor_mod(w + mul_mod(static_cast<std::int64_t>(i), r, n), n);
  }
  return {s, w};
}

bool in_kernel(const IntVec& x) { return phi(x) == PhiImage{0, 0}; }

LatticeBasis u_basis(std::int64_t n) {
  if (n < 2) throw DomainError("u-basis needs n >= 2, got " + std::to_string(n));
  const auto last = static_cast<std::size_t>(n - 1);
  const auto second_last = static_cast<std::size_t>(n - 2);
  std::vector<IntVec> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (std::int64_t r = 0; r + 3 <= n; ++r) {
    IntVec u = IntVec::unit(n, static_cast<std::size_t>(r));
    u[second_last] += r + 1;
    u[last] += n - r - 2;
    rows.push_back(std::move(u));
  }
  rows.push_back(n * IntVec::unit(n, second_last));
  rows.push_back(n * IntVec::unit(n, last));
  return LatticeBasis(n, std::move(rows));
}

std::vector<std::int64_t> smith_diagonal(std::vector<std::vector<std::int64_t>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (const auto& r : a) {
    if (r.size() != cols) throw PreconditionError("ragged matrix");
  }
  const std::size_t rank_bound = std::min(rows, cols);
  std::vector<std::int64_t> diag(rank_bound, 0);

  auto row_axpy = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t j = 0; j < cols; ++j) a[dst][j] = checked_sub(a[dst][j], checked_mul(q, a[src][j]));
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t i = 0; i < rows; ++i) a[i][dst] = checked_sub(a[i][dst], checked_mul(q, a[i][src]));
  };

  for (std::size_t t = 0; t < rank_bound; ++t) {
    for (;;) {
      // Pivot: least nonzero |entry| in the trailing block; first in
      // row-major order on ties.
      std::size_t pi = rows, pj = cols;
      std::int64_t best = 0;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] == 0) continue;
          const std::int64_t v = checked_abs(a[i][j]);
          if (pi == rows || v < best) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) return diag;  // trailing block is zero

      std::swap(a[t], a[pi]);
      if (pj != t) {
        for (auto& r : a) std::swap(r[t], r[pj]);
      }
      const std::int64_t p = a[t][t];

      bool cleared = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        row_axpy(i, t, a[i][t] / p);
        if (a[i][t] != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        col_axpy(j, t, a[t][j] / p);
        if (a[t][j] != 0) cleared = false;
      }
      if (!cleared) continue;

      // Pivot must divide the whole trailing block; otherwise fold the
      // offending row into the pivot row and reduce again.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % p != 0) {
            row_axpy(t, i, -1);
            divides = false;
            break;
          }
        }
      }
      if (divides) {
        diag[t] = checked_abs(p);
        break;
      }
    }
  }
  return diag;
}

SnfReport lattice_index(const LatticeBasis& basis) {
  std::vector<std::vector<std::int64_t>> m;
  m.reserve(basis.rows().size());
  for (const auto& r : basis.rows()) m.push_back(r.values());
  SnfReport rep;
  rep.diagonal = smith_diagonal(std::move(m));
  rep.index = 1;
  for (auto d : rep.diagonal) {
    if (d == 0) throw DegenerateBasisError("basis rows are linearly dependent");
    rep.index = checked_mul(rep.index, d);
  }
  return rep;
}

std::vector<std::int64_t> to_u_coordinates(const IntVec& x) {
  const std::int64_t n = x.modulus();
  if (n < 2) throw DomainError("u-coordinates need n >= 2, got " + std::to_string(n));
  const PhiImage img = phi(x);
  if (img.sum_class != 0) {
    throw PreconditionError("vector " + x.to_string() + " is not in the kernel: coordinate sum is " +
                            std::to_string(img.sum_class) + " mod " + std::to_string(n));
  }
  if (img.weighted_class != 0) {
    throw PreconditionError("vector " + x.to_string() + " is not in the kernel: weighted sum is " +
                            std::to_string(img.weighted_class) + " mod " + std::to_string(n));
  }
  const auto last = static_cast<std::size_t>(n - 1);
  const auto second_last = static_cast<std::size_t>(n - 2);
  std::vector<std::int64_t> d(static_cast<std::size_t>(n), 0);
  std::int64_t num_second = x[second_last];
  std::int64_t num_last = x[last];
  for (std::size_t i = 0; i < second_last; ++i) {
    d[i] = x[i];
    const auto ii = static_cast<std::int64_t>(i);
    num_second = checked_sub(num_second, checked_mul(ii + 1, x[i]));
    num_last = checked_sub(num_last, checked_mul(n - ii - 2, x[i]));
  }
  // Both numerators are multiples of n on the kernel.
  if (num_second % n != 0 || num_last % n != 0) {
    throw ContradictionError("u-coordinate division is inexact for kernel vector " + x.to_string());
  }
  d[second_last] = num_second / n;
  d[last] = num_last / n;
  return d;
}

}  // namespace egzkit
