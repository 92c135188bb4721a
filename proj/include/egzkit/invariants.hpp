#pragma once

// Diagonal actions of Z/n on polynomial rings: each variable x_j carries a
// character weight w_j, and the generator scales x_j by xi^{w_j}. A monomial
// is invariant iff sum e_j w_j = 0 mod n. Collapsing exponents onto weight
// classes turns invariant monomials of degree d*n into elements of the
// semigroup M at degree d, which is how factor_invariant splits them.

#include <cstdint>
#include <vector>

#include "egzkit/int_vec.hpp"
#include "egzkit/semigroup.hpp"

namespace egzkit {

class WeightVector {
 public:
  /// Weights are reduced into [0, n). Throws DomainError for n < 1 or an
  /// empty weight list.
  WeightVector(std::int64_t modulus, std::vector<std::int64_t> weights);

  /// Weights (0, 1, ..., n-1).
  static WeightVector regular(std::int64_t n);

  std::int64_t modulus() const { return modulus_; }
  std::size_t dimension() const { return weights_.size(); }
  const std::vector<std::int64_t>& weights() const { return weights_; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::int64_t modulus_;
  std::vector<std::int64_t> weights_;
};

class Monomial {
 public:
  /// Throws PreconditionError on negative exponents or a dimension mismatch.
  Monomial(std::vector<std::int64_t> exponents, const WeightVector& wv);

  const std::vector<std::int64_t>& exponents() const { return exponents_; }
  std::int64_t degree() const { return degree_; }
  std::int64_t weight_class() const { return weight_class_; }
  bool invariant() const { return weight_class_ == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents_ == b.exponents_; }

 private:
  std::vector<std::int64_t> exponents_;
  std::int64_t degree_ = 0;
  std::int64_t weight_class_ = 0;
};

/// Per-weight-class exponent totals m_i = sum_{j : w_j = i} e_j.
IntVec class_multiplicities(const Monomial& mono, const WeightVector& wv);

/// All invariant monomials of the given degree, descending lex on exponents.
/// Throws ResourceLimitError if more than `max_candidates` exponent vectors
/// would have to be scanned.
std::vector<Monomial> enumerate_invariant_monomials(const WeightVector& wv, std::int64_t degree,
                                                    std::uint64_t max_candidates = kDefaultMaxCandidates);

/// Split an invariant monomial of degree d*n into d invariant monomials of
/// degree n whose exponentwise sum is the input. Variable exponents are
/// spread over the factors in variable order, earliest factor with spare
/// class capacity first.
/// Throws PreconditionError for non-invariant input or a degree that is not
/// a positive multiple of n, and ContradictionError if no split exists.
std::vector<Monomial> factor_invariant(const Monomial& mono, const WeightVector& wv);

struct GenerationReport {
  WeightVector weights;
  std::vector<std::int64_t> degrees_checked;  // d, for monomial degree d*n
  std::vector<std::uint64_t> candidates_per_degree;
  std::vector<Monomial> failures;

  bool ok() const { return failures.empty(); }
};

/// Factor every invariant monomial of degree d*n, d = 1..max_d. A monomial
/// lands in `failures` if factor_invariant raises ContradictionError.
GenerationReport check_degree_one_generation(const WeightVector& wv, std::int64_t max_d,
                                             std::uint64_t max_candidates = kDefaultMaxCandidates);

}  // namespace egzkit
