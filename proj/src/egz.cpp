#include "egzkit/egz.hpp"

#include <algorithm>

#include "egzkit/arith.hpp"
#include "egzkit/errors.hpp"
#include "egzkit/lattice.hpp"
#include "egzkit/semigroup.hpp"

namespace egzkit {

ResidueSequence::ResidueSequence(std::int64_t modulus, std::vector<std::int64_t> elements)
    : modulus_(modulus), elements_(std::move(elements)) {
  if (modulus_ < 1) throw DomainError("modulus must be >= 1, got " + std::to_string(modulus_));
  for (auto& e : elements_) e = floor_mod(e, modulus_);
}

IntVec ResidueSequence::counts() const {
  IntVec c(modulus_);
  for (auto e : elements_) ++c[static_cast<std::size_t>(e)];
  return c;
}

ResidueSequence ResidueSequence::prefix(std::size_t len) const {
  len = std::min(len, elements_.size());
  return ResidueSequence(modulus_, {elements_.begin(), elements_.begin() + static_cast<std::ptrdiff_t>(len)});
}

bool is_valid_witness(const ResidueSequence& seq, const ZeroSumWitness& w) {
  const auto& idx = w.indices;
  if (idx.size() != static_cast<std::size_t>(seq.modulus())) return false;
  std::int64_t sum = 0;
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] >= seq.size()) return false;
    if (j > 0 && idx[j] <= idx[j - 1]) return false;
    sum = floor_mod(sum + seq.elements()[idx[j]], seq.modulus());
  }
  return sum == 0;
}

std::size_t egz_bound(std::int64_t n) { return static_cast<std::size_t>(2 * n - 1); }

namespace {

struct LexSubsetScan {
  const std::vector<std::int64_t>& a;
  std::size_t want;
  std::int64_t n;
  std::vector<std::size_t> chosen;

  bool scan(std::size_t from, std::int64_t sum) {
    if (chosen.size() == want) return sum == 0;
    const std::size_t still = want - chosen.size();
    for (std::size_t i = from; i + still <= a.size(); ++i) {
      chosen.push_back(i);
      if (scan(i + 1, floor_mod(sum + a[i], n))) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<ZeroSumWitness> solve_brute(const ResidueSequence& seq) {
  const auto want = static_cast<std::size_t>(seq.modulus());
  if (seq.size() < want) return std::nullopt;
  LexSubsetScan scan{seq.elements(), want, seq.modulus(), {}};
  if (!scan.scan(0, 0)) return std::nullopt;
  return ZeroSumWitness{std::move(scan.chosen)};
}

std::optional<ZeroSumWitness> solve_dp(const ResidueSequence& seq, std::uint64_t max_cells) {
  const std::int64_t n = seq.modulus();
  const std::size_t m = seq.size();
  const auto un = static_cast<std::size_t>(n);
  if (m < un) return std::nullopt;

  const std::size_t layer = (un + 1) * un;
  const unsigned __int128 cells = static_cast<unsigned __int128>(m + 1) * layer;
  if (cells > max_cells) {
    throw ResourceLimitError("dp table of " + std::to_string(static_cast<std::uint64_t>(cells)) +
                             " cells exceeds the ceiling of " + std::to_string(max_cells));
  }
  // reach[i][k][s]: some k of the first i elements sum to s mod n.
  std::vector<std::uint8_t> reach((m + 1) * layer, 0);
  auto at = [&](std::size_t i, std::size_t k, std::int64_t s) -> std::uint8_t& {
    return reach[i * layer + k * un + static_cast<std::size_t>(s)];
  };
  at(0, 0, 0) = 1;
  const auto& a = seq.elements();
  for (std::size_t i = 1; i <= m; ++i) {
    const std::int64_t x = a[i - 1];
    for (std::size_t k = 0; k <= un; ++k) {
      for (std::int64_t s = 0; s < n; ++s) {
        std::uint8_t v = at(i - 1, k, s);
        if (!v && k > 0) v = at(i - 1, k - 1, floor_mod(s - x, n));
        at(i, k, s) = v;
      }
    }
  }
  if (!at(m, un, 0)) return std::nullopt;

  // Walk back, skipping an element whenever the state survives without it.
  std::vector<std::size_t> picked;
  std::size_t k = un;
  std::int64_t s = 0;
  for (std::size_t i = m; i > 0 && k > 0; --i) {
    if (at(i - 1, k, s)) continue;
    picked.push_back(i - 1);
    s = floor_mod(s - a[i - 1], n);
    --k;
  }
  std::reverse(picked.begin(), picked.end());
  return ZeroSumWitness{std::move(picked)};
}

IntVec select_realizable_factor(const IntVec& f1, const IntVec& f2, const IntVec& original_counts,
                                std::int64_t appended) {
  const std::int64_t n = original_counts.modulus();
  if (f1.modulus() != n || f2.modulus() != n) throw PreconditionError("factor moduli differ from the counts");
  if (appended < 0 || appended >= n) throw PreconditionError("appended residue out of range");
  if (!is_generator(f1) || !is_generator(f2)) throw PreconditionError("factors must be degree-n generators");
  IntVec expect = original_counts;
  ++expect[static_cast<std::size_t>(appended)];
  if (f1 + f2 != expect) {
    throw PreconditionError("factors " + f1.to_string() + " + " + f2.to_string() +
                            " do not account for the original counts plus the appended residue");
  }
  if (f1.dominated_by(original_counts)) return f1;
  if (f2.dominated_by(original_counts)) return f2;
  // Unreachable: only the appended class can be over-demanded, by one
  // factor at most.
  throw PreconditionError("neither factor is realisable from the original counts");
}

InvariantRouteTrace solve_invariant_route_traced(const ResidueSequence& seq) {
  const std::int64_t n = seq.modulus();
  const std::size_t bound = egz_bound(n);
  if (seq.size() < bound) {
    throw PreconditionError("sequence of length " + std::to_string(seq.size()) +
                            " is shorter than the EGZ bound 2n-1 = " + std::to_string(bound));
  }
  InvariantRouteTrace tr;
  if (n == 1) {
    tr.multiplicities = IntVec(1, {2});
    tr.factors = {IntVec(1, {1}), IntVec(1, {1})};
    tr.witness = ZeroSumWitness{{0}};
    return tr;
  }

  const ResidueSequence head = seq.prefix(bound);
  const IntVec originals = head.counts();
  std::int64_t sum = 0;
  for (auto e : head.elements()) sum = floor_mod(sum + e, n);
  tr.appended = floor_mod(-sum, n);

  tr.multiplicities = originals;
  ++tr.multiplicities[static_cast<std::size_t>(tr.appended)];
  if (tr.multiplicities.total() != 2 * n || phi(tr.multiplicities).weighted_class != 0) {
    throw ContradictionError("augmented counts " + tr.multiplicities.to_string() + " are not a degree-2n invariant");
  }

  auto dec = decompose_in_semigroup(tr.multiplicities);
  if (!dec || dec->parts.size() != 2) {
    throw ContradictionError("degree-2n invariant " + tr.multiplicities.to_string() +
                             " does not split into two degree-n invariants");
  }
  tr.factors = dec->parts;
  const IntVec chosen = select_realizable_factor(tr.factors[0], tr.factors[1], originals, tr.appended);
  tr.selected = chosen == tr.factors[0] ? 0 : 1;

  // Consume original indices in ascending order per residue class.
  IntVec need = chosen;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < head.size(); ++i) {
    auto& c = need[static_cast<std::size_t>(head.elements()[i])];
    if (c > 0) {
      --c;
      idx.push_back(i);
    }
  }
  tr.witness = ZeroSumWitness{std::move(idx)};
  if (!is_valid_witness(head, tr.witness)) {
    throw ContradictionError("selected factor " + chosen.to_string() + " does not yield a zero-sum witness");
  }
  return tr;
}

ZeroSumWitness solve_invariant_route(const ResidueSequence& seq) { return solve_invariant_route_traced(seq).witness; }

}  // namespace egzkit
