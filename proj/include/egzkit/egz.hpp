#pragma once

/**
 * @file egz.hpp
 * @brief Constructive Erdős–Ginzburg–Ziv: among any 2n-1 elements of Z/n
 * some n sum to zero.
 *
 * Three solvers:
 *  - solve_brute: lex-first n-subset; the reference oracle.
 *  - solve_dp: reachability table over (prefix, chosen count, sum mod n).
 *  - solve_invariant_route: append a = -(a_1 + ... + a_{2n-1}) so that the
 *    2n residues form an invariant monomial of degree 2n for the regular
 *    representation, split it into two degree-n invariants, and return the
 *    half that can be realised without the appended element.
 *
 * Witnesses are strictly increasing index lists of length n.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "egzkit/int_vec.hpp"

namespace egzkit {

class ResidueSequence {
 public:
  /// Elements are reduced into [0, n). Throws DomainError for n < 1.
  ResidueSequence(std::int64_t modulus, std::vector<std::int64_t> elements);

  std::int64_t modulus() const { return modulus_; }
  const std::vector<std::int64_t>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  /// How often each residue occurs: an IntVec of length n.
  IntVec counts() const;
  ResidueSequence prefix(std::size_t len) const;

  friend bool operator==(const ResidueSequence&, const ResidueSequence&) = default;

 private:
  std::int64_t modulus_;
  std::vector<std::int64_t> elements_;
};

struct ZeroSumWitness {
  std::vector<std::size_t> indices;

  friend bool operator==(const ZeroSumWitness&, const ZeroSumWitness&) = default;
};

/// Exactly n strictly increasing in-range indices whose elements sum to 0
/// mod n.
bool is_valid_witness(const ResidueSequence& seq, const ZeroSumWitness& w);

/// The 2n-1 bound: smallest length that always contains a witness.
std::size_t egz_bound(std::int64_t n);

std::optional<ZeroSumWitness> solve_brute(const ResidueSequence& seq);

/// Throws ResourceLimitError when the table would exceed `max_cells`.
std::optional<ZeroSumWitness> solve_dp(const ResidueSequence& seq, std::uint64_t max_cells = 1ULL << 30);

/// Of two degree-n generators f1 + f2 = original_counts + e_a, return one
/// that fits inside original_counts; f1 when both do.
/// Throws PreconditionError if the inputs do not have that shape.
IntVec select_realizable_factor(const IntVec& f1, const IntVec& f2, const IntVec& original_counts,
                                std::int64_t appended);

/// Intermediate state of the invariant-factorisation route, kept for
/// auditing.
struct InvariantRouteTrace {
  std::int64_t appended = 0;           // a = -(sum of the first 2n-1) mod n
  IntVec multiplicities = IntVec(1);   // residue counts of the 2n residues
  std::vector<IntVec> factors;         // the two degree-n generators
  std::size_t selected = 0;            // which factor was realised
  ZeroSumWitness witness;
};

/// Uses only the first 2n-1 elements. Throws PreconditionError when
/// seq.size() < 2n-1, ContradictionError if the degree-2n decomposition
/// fails.
InvariantRouteTrace solve_invariant_route_traced(const ResidueSequence& seq);
ZeroSumWitness solve_invariant_route(const ResidueSequence& seq);

}  // namespace egzkit
