#include "egzkit/invariants.hpp"

#include "egzkit/arith.hpp"
#include "egzkit/compositions.hpp"
#include "egzkit/errors.hpp"

namespace egzkit {

WeightVector::WeightVector(std::int64_t modulus, std::vector<std::int64_t> weights)
    : modulus_(modulus), weights_(std::move(weights)) {
  if (modulus_ < 1) throw DomainError("modulus must be >= 1, got " + std::to_string(modulus_));
  if (weights_.empty()) throw DomainError("weight vector needs at least one variable");
  for (auto& w : weights_) w = floor_mod(w, modulus_);
}

WeightVector WeightVector::regular(std::int64_t n) {
  std::vector<std::int64_t> w(n > 0 ? static_cast<std::size_t>(n) : 0);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<std::int64_t>(i);
  return WeightVector(n, std::move(w));
}

Monomial::Monomial(std::vector<std::int64_t> exponents, const WeightVector& wv) : exponents_(std::move(exponents)) {
  if (exponents_.size() != wv.dimension()) {
    throw PreconditionError("monomial has " + std::to_string(exponents_.size()) + " exponents for " +
                            std::to_string(wv.dimension()) + " variables");
  }
  const std::int64_t n = wv.modulus();
  for (std::size_t j = 0; j < exponents_.size(); ++j) {
    if (exponents_[j] < 0) throw PreconditionError("negative exponent");
    degree_ = checked_add(degree_, exponents_[j]);
    weight_class_ = floor_mod(weight_class_ + mul_mod(exponents_[j], wv.weights()[j], n), n);
  }
}

IntVec class_multiplicities(const Monomial& mono, const WeightVector& wv) {
  if (mono.exponents().size() != wv.dimension()) throw PreconditionError("monomial and weight vector dimensions differ");
  IntVec m(wv.modulus());
  for (std::size_t j = 0; j < wv.dimension(); ++j) {
    auto& slot = m[static_cast<std::size_t>(wv.weights()[j])];
    slot = checked_add(slot, mono.exponents()[j]);
  }
  return m;
}

std::vector<Monomial> enumerate_invariant_monomials(const WeightVector& wv, std::int64_t degree,
                                                    std::uint64_t max_candidates) {
  if (degree < 0) throw PreconditionError("degree must be nonnegative");
  if (weak_composition_count(degree, wv.dimension(), max_candidates + 1) > max_candidates) {
    throw ResourceLimitError("enumerating degree-" + std::to_string(degree) + " monomials in " +
                             std::to_string(wv.dimension()) + " variables exceeds the candidate ceiling of " +
                             std::to_string(max_candidates));
  }
  std::vector<Monomial> out;
  WeakCompositions it(degree, wv.dimension());
  do {
    Monomial m(it.current(), wv);
    if (m.invariant()) out.push_back(std::move(m));
  } while (it.next());
  return out;
}

std::vector<Monomial> factor_invariant(const Monomial& mono, const WeightVector& wv) {
  const std::int64_t n = wv.modulus();
  if (!mono.invariant()) {
    throw PreconditionError("monomial has weight class " + std::to_string(mono.weight_class()) + ", not invariant");
  }
  if (mono.degree() == 0 || mono.degree() % n != 0) {
    throw PreconditionError("monomial degree " + std::to_string(mono.degree()) +
                            " is not a positive multiple of " + std::to_string(n));
  }
  const IntVec classes = class_multiplicities(mono, wv);
  auto dec = decompose_in_semigroup(classes);
  if (!dec) {
    throw ContradictionError("class multiplicities " + classes.to_string() +
                             " of an invariant monomial do not decompose into generators");
  }

  const std::size_t d = dec->parts.size();
  std::vector<std::vector<std::int64_t>> exps(d, std::vector<std::int64_t>(wv.dimension(), 0));
  // Remaining class capacity of each factor.
  std::vector<IntVec> capacity = dec->parts;
  for (std::size_t j = 0; j < wv.dimension(); ++j) {
    const auto cls = static_cast<std::size_t>(wv.weights()[j]);
    std::int64_t left = mono.exponents()[j];
    for (std::size_t k = 0; k < d && left > 0; ++k) {
      const std::int64_t take = std::min(left, capacity[k][cls]);
      exps[k][j] += take;
      capacity[k][cls] -= take;
      left -= take;
    }
    if (left != 0) throw ContradictionError("exponent distribution left a remainder");
  }

  std::vector<Monomial> factors;
  factors.reserve(d);
  for (auto& e : exps) {
    Monomial f(std::move(e), wv);
    if (f.degree() != n || !f.invariant()) {
      throw ContradictionError("factor of " + classes.to_string() + " is not an invariant of degree n");
    }
    factors.push_back(std::move(f));
  }
  return factors;
}

GenerationReport check_degree_one_generation(const WeightVector& wv, std::int64_t max_d,
                                             std::uint64_t max_candidates) {
  if (max_d < 1) throw DomainError("max degree must be >= 1, got " + std::to_string(max_d));
  const std::int64_t n = wv.modulus();
  std::uint64_t planned = 0;
  for (std::int64_t d = 1; d <= max_d; ++d) {
    planned = std::min(planned + weak_composition_count(checked_mul(d, n), wv.dimension(), max_candidates + 1),
                       max_candidates + 1);
  }
  if (planned > max_candidates) {
    throw ResourceLimitError("generation check up to degree " + std::to_string(max_d * n) +
                             " exceeds the candidate ceiling of " + std::to_string(max_candidates));
  }

  GenerationReport rep{wv, {}, {}, {}};
  for (std::int64_t d = 1; d <= max_d; ++d) {
    const auto monos = enumerate_invariant_monomials(wv, d * n, max_candidates);
    for (const auto& m : monos) {
      try {
        auto factors = factor_invariant(m, wv);
        if (static_cast<std::int64_t>(factors.size()) != d) rep.failures.push_back(m);
      } catch (const ContradictionError&) {
        rep.failures.push_back(m);
      }
    }
    rep.degrees_checked.push_back(d);
    rep.candidates_per_degree.push_back(monos.size());
  }
  return rep;
}

}  // namespace egzkit
