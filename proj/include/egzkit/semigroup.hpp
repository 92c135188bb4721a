#pragma once

/**
 * @file semigroup.hpp
 * @brief The graded semigroup M generated by the degree-n zero-weight
 * compositions S(n), membership by explicit decomposition, and an
 * exhaustive audit of its saturation in the kernel lattice.
 *
 * S(n) = { m in Z_{>=0}^n : sum m_i = n, sum i*m_i = 0 mod n }.
 * An element of M of coordinate sum d*n is a sum of exactly d generators.
 * Saturation of M in its group is equivalent to: every nonnegative x with
 * sum x_i = d*n and sum i*x_i = 0 mod n is such a sum.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "egzkit/int_vec.hpp"

namespace egzkit {

inline constexpr std::uint64_t kDefaultMaxCandidates = 10'000'000;

/// S(n) in strictly descending lexicographic order.
class GeneratorSet {
 public:
  /// Validates every invariant; throws PreconditionError otherwise.
  GeneratorSet(std::int64_t modulus, std::vector<IntVec> vectors);

  std::int64_t modulus() const { return modulus_; }
  const std::vector<IntVec>& vectors() const { return vectors_; }
  std::size_t size() const { return vectors_.size(); }
  bool contains(const IntVec& v) const;

 private:
  std::int64_t modulus_;
  std::vector<IntVec> vectors_;
};

/// True iff v is nonnegative with sum n and weighted sum 0 mod n.
bool is_generator(const IntVec& v);

struct Decomposition {
  IntVec target;
  std::vector<IntVec> parts;  // d parts, in the order the search chose them

  std::size_t degree() const { return parts.size(); }
};

/// Throws DomainError for n < 1.
GeneratorSet enumerate_generators(std::int64_t n);

/// Visit every generator g <= cap (componentwise) in descending lex order
/// without materialising S(n). The visitor returns true to stop early.
/// Returns true iff the visitor stopped the walk.
bool for_each_generator_below(const IntVec& cap, const std::function<bool(const IntVec&)>& visit);

/// Decompose x into d = sum(x)/n parts drawn from `gens`. Depth-first in the
/// order of `gens`, lex-largest admissible generator first, full
/// backtracking, memoised failed residuals. Returns nullopt iff x is not in
/// the semigroup generated by `gens`.
/// Throws PreconditionError for negative coordinates or a modulus mismatch.
std::optional<Decomposition> decompose(const IntVec& x, const GeneratorSet& gens);

/// Same search against the full S(n), with candidates generated lazily by
/// for_each_generator_below. Produces exactly the decomposition that
/// decompose(x, enumerate_generators(n)) produces, without the O(|S(n)|)
/// list; this is the route used for larger n.
std::optional<Decomposition> decompose_in_semigroup(const IntVec& x);

struct SaturationReport {
  std::int64_t modulus = 0;
  std::vector<std::int64_t> degrees_checked;
  std::vector<std::uint64_t> candidates_per_degree;
  std::vector<IntVec> failures;  // empty iff graded generation held

  bool ok() const { return failures.empty(); }
};

/// Exhaustively decompose every nonnegative x with sum d*n and weighted sum
/// 0 mod n, for d = 1..max_degree. Candidates are visited in descending lex
/// order. Throws ResourceLimitError when the number of compositions to scan
/// exceeds `max_candidates`.
SaturationReport check_saturation(std::int64_t n, std::int64_t max_degree,
                                  std::uint64_t max_candidates = kDefaultMaxCandidates);

}  // namespace egzkit
