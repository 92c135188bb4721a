#include "egzkit/semigroup.hpp"

#include <algorithm>
#include <unordered_set>

#include "egzkit/arith.hpp"
#include "egzkit/compositions.hpp"
#include "egzkit/errors.hpp"
#include "egzkit/lattice.hpp"

namespace egzkit {

bool is_generator(const IntVec& v) {
  return v.nonnegative() && v.total() == v.modulus() && phi(v).weighted_class == 0;
}

GeneratorSet::GeneratorSet(std::int64_t modulus, std::vector<IntVec> vectors)
    : modulus_(modulus), vectors_(std::move(vectors)) {
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    const auto& v = vectors_[i];
    if (v.modulus() != modulus_ || !is_generator(v)) {
      throw PreconditionError(v.to_string() + " is not a degree-" + std::to_string(modulus_) +
                              " zero-weight composition");
    }
    if (i > 0 && !(vectors_[i - 1] > v)) {
      throw PreconditionError("generator set must be strictly descending in lex order");
    }
  }
}

bool GeneratorSet::contains(const IntVec& v) const {
  return std::binary_search(vectors_.begin(), vectors_.end(), v, std::greater<>{});
}

GeneratorSet enumerate_generators(std::int64_t n) {
  if (n < 1) throw DomainError("modulus must be >= 1, got " + std::to_string(n));
  std::vector<IntVec> out;
  WeakCompositions it(n, static_cast<std::size_t>(n));
  do {
    IntVec v(n, it.current());
    if (phi(v).weighted_class == 0) out.push_back(std::move(v));
  } while (it.next());
  return GeneratorSet(n, std::move(out));
}

namespace {

// reach[(i * (n + 1) + r) * n + w]: positions i..n-1, each bounded by cap,
// can contribute coordinate sum exactly r and weighted sum w mod n.
class BoundedReach {
 public:
  explicit BoundedReach(const IntVec& cap)
      : n_(cap.modulus()), table_(static_cast<std::size_t>((n_ + 1) * (n_ + 1) * n_), 0) {
    at(n_, 0, 0) = 1;
    for (std::int64_t i = n_ - 1; i >= 0; --i) {
      const std::int64_t bound = std::min<std::int64_t>(cap[static_cast<std::size_t>(i)], n_);
      for (std::int64_t r = 0; r <= n_; ++r) {
        for (std::int64_t w = 0; w < n_; ++w) {
          for (std::int64_t t = 0; t <= std::min(bound, r); ++t) {
            if (at(i + 1, r - t, floor_mod(w - i * t, n_))) {
              at(i, r, w) = 1;
              break;
            }
          }
        }
      }
    }
  }

  bool operator()(std::int64_t i, std::int64_t r, std::int64_t w) const {
    return table_[index(i, r, w)] != 0;
  }

 private:
  std::size_t index(std::int64_t i, std::int64_t r, std::int64_t w) const {
    return static_cast<std::size_t>((i * (n_ + 1) + r) * n_ + w);
  }
  std::uint8_t& at(std::int64_t i, std::int64_t r, std::int64_t w) { return table_[index(i, r, w)]; }

  std::int64_t n_;
  std::vector<std::uint8_t> table_;
};

struct BelowWalker {
  const IntVec& cap;
  const BoundedReach& reach;
  const std::function<bool(const IntVec&)>& visit;
  IntVec cur;

  // Fill position i with `left` units still to place and weighted residue
  // `need` still required from positions i..n-1.
  bool walk(std::int64_t i, std::int64_t left, std::int64_t need) {
    const std::int64_t n = cap.modulus();
    if (i == n) return visit(cur);
    const auto ui = static_cast<std::size_t>(i);
    const std::int64_t top = std::min(cap[ui], left);
    for (std::int64_t t = top; t >= 0; --t) {
      const std::int64_t rest = floor_mod(need - i * t, n);
      if (!reach(i + 1, left - t, rest)) continue;
      cur[ui] = t;
      if (walk(i + 1, left - t, rest)) return true;
    }
    cur[ui] = 0;
    return false;
  }
};

bool is_zero(const IntVec& v) {
  return std::all_of(v.coords().begin(), v.coords().end(), [](std::int64_t c) { return c == 0; });
}

// Shared depth-first search; `candidates(residual, visit)` must present the
// admissible generators <= residual in descending lex order.
template <typename Candidates>
class DecompositionSearch {
 public:
  explicit DecompositionSearch(Candidates candidates) : candidates_(std::move(candidates)) {}

  bool run(const IntVec& residual) {
    if (is_zero(residual)) return true;
    if (failed_.contains(residual)) return false;
    const bool found = candidates_(residual, [&](const IntVec& g) {
      parts_.push_back(g);
      if (run(residual - g)) return true;
      parts_.pop_back();
      return false;
    });
    if (!found) failed_.insert(residual);
    return found;
  }

  std::vector<IntVec> take_parts() { return std::move(parts_); }

 private:
  Candidates candidates_;
  std::vector<IntVec> parts_;
  std::unordered_set<IntVec, IntVecHash> failed_;
};

void check_decomposable_input(const IntVec& x) {
  if (!x.nonnegative()) {
    throw PreconditionError("decompose needs nonnegative coordinates, got " + x.to_string());
  }
}

// Cheap necessary conditions for membership in the semigroup of S(n).
bool admissible(const IntVec& x) {
  const PhiImage img = phi(x);
  return img.sum_class == 0 && img.weighted_class == 0;
}

std::optional<Decomposition> finish(const IntVec& x, std::vector<IntVec> parts) {
  IntVec sum(x.modulus());
  for (const auto& p : parts) {
    if (!is_generator(p)) throw ContradictionError("decomposition part " + p.to_string() + " is not a generator");
    sum += p;
  }
  if (sum != x) throw ContradictionError("decomposition of " + x.to_string() + " does not sum to it");
  return Decomposition{x, std::move(parts)};
}

}  // namespace

bool for_each_generator_below(const IntVec& cap, const std::function<bool(const IntVec&)>& visit) {
  if (!cap.nonnegative()) throw PreconditionError("generator bound must be nonnegative");
  const BoundedReach reach(cap);
  const std::int64_t n = cap.modulus();
  if (!reach(0, n, 0)) return false;
  BelowWalker walker{cap, reach, visit, IntVec(n)};
  return walker.walk(0, n, 0);
}

std::optional<Decomposition> decompose(const IntVec& x, const GeneratorSet& gens) {
  check_decomposable_input(x);
  if (x.modulus() != gens.modulus()) throw PreconditionError("vector and generator set have different moduli");
  if (!admissible(x)) return std::nullopt;
  auto candidates = [&gens](const IntVec& residual, const auto& visit) {
    for (const auto& g : gens.vectors()) {
      if (g.dominated_by(residual) && visit(g)) return true;
    }
    return false;
  };
  DecompositionSearch search(candidates);
  if (!search.run(x)) return std::nullopt;
  return finish(x, search.take_parts());
}

std::optional<Decomposition> decompose_in_semigroup(const IntVec& x) {
  check_decomposable_input(x);
  if (!admissible(x)) return std::nullopt;
  auto candidates = [](const IntVec& residual, const auto& visit) {
    return for_each_generator_below(residual, [&](const IntVec& g) { return visit(g); });
  };
  DecompositionSearch search(candidates);
  if (!search.run(x)) return std::nullopt;
  return finish(x, search.take_parts());
}

SaturationReport check_saturation(std::int64_t n, std::int64_t max_degree, std::uint64_t max_candidates) {
  if (n < 1) throw DomainError("modulus must be >= 1, got " + std::to_string(n));
  if (max_degree < 1) throw DomainError("max degree must be >= 1, got " + std::to_string(max_degree));

  std::uint64_t planned = 0;
  for (std::int64_t d = 1; d <= max_degree; ++d) {
    const std::uint64_t c =
        weak_composition_count(checked_mul(d, n), static_cast<std::size_t>(n), max_candidates + 1);
    planned = std::min(planned + c, max_candidates + 1);
  }
  if (planned > max_candidates) {
    throw ResourceLimitError("saturation check for n=" + std::to_string(n) + " up to degree " +
                             std::to_string(max_degree) + " exceeds the candidate ceiling of " +
                             std::to_string(max_candidates));
  }

  const GeneratorSet gens = enumerate_generators(n);
  SaturationReport rep;
  rep.modulus = n;
  for (std::int64_t d = 1; d <= max_degree; ++d) {
    std::uint64_t count = 0;
    WeakCompositions it(d * n, static_cast<std::size_t>(n));
    do {
      IntVec x(n, it.current());
      if (phi(x).weighted_class != 0) continue;
      ++count;
      if (!decompose(x, gens)) rep.failures.push_back(std::move(x));
    } while (it.next());
    rep.degrees_checked.push_back(d);
    rep.candidates_per_degree.push_back(count);
  }
  return rep;
}

}  // namespace egzkit
