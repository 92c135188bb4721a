#include "doctest.h"
#include "egzkit/egz.hpp"
#include "egzkit/errors.hpp"
#include "egzkit/lattice.hpp"
#include "egzkit/rng.hpp"
#include "oracles.hpp"

using namespace egzkit;

namespace {

using Idx = std::vector<std::size_t>;

ResidueSequence seq(std::int64_t n, std::vector<std::int64_t> a) { return ResidueSequence(n, std::move(a)); }

ResidueSequence sharpness(std::int64_t n) {
  std::vector<std::int64_t> a(static_cast<std::size_t>(n - 1), 0);
  a.insert(a.end(), static_cast<std::size_t>(n - 1), 1);
  return seq(n, a);
}

}  // namespace

TEST_CASE("residue sequences reduce and count") {
  const auto s = seq(4, {7, -1, 2});
  CHECK(s.elements() == std::vector<std::int64_t>{3, 3, 2});
  CHECK(s.counts() == IntVec(4, {0, 0, 1, 2}));
  CHECK(s.prefix(2).elements() == std::vector<std::int64_t>{3, 3});
  CHECK(s.prefix(10) == s);
  CHECK_THROWS_AS(seq(0, {1}), DomainError);
}

TEST_CASE("witness validation") {
  const auto s = seq(3, {1, 1, 1, 2, 2});
  CHECK(is_valid_witness(s, {{0, 1, 2}}));
  CHECK_FALSE(is_valid_witness(s, {{0, 1, 3}}));     // sum 4
  CHECK_FALSE(is_valid_witness(s, {{1, 0, 2}}));     // not increasing
  CHECK_FALSE(is_valid_witness(s, {{0, 0, 1}}));     // repeated
  CHECK_FALSE(is_valid_witness(s, {{0, 1}}));        // wrong size
  CHECK_FALSE(is_valid_witness(s, {{0, 1, 9}}));     // out of range
}

TEST_CASE("solve_brute returns the lex-first witness") {
  CHECK(solve_brute(seq(3, {1, 1, 1, 2, 2}))->indices == Idx{0, 1, 2});
  CHECK(solve_brute(seq(2, {1, 0, 1}))->indices == Idx{0, 2});
  CHECK_FALSE(solve_brute(seq(3, {0, 0, 1, 1})));
  CHECK(solve_brute(seq(1, {0}))->indices == Idx{0});
  CHECK_FALSE(solve_brute(seq(3, {0, 0})));  // m < n
  CHECK(solve_brute(seq(3, {2, 0, 1, 0, 0}))->indices == Idx{0, 1, 2});
}

TEST_CASE("solve_dp") {
  const auto s = seq(3, {1, 1, 1, 2, 2});
  const auto w = solve_dp(s);
  REQUIRE(w);
  CHECK(is_valid_witness(s, *w));

  const auto zeros = seq(5, std::vector<std::int64_t>(9, 0));
  const auto wz = solve_dp(zeros);
  REQUIRE(wz);
  CHECK(is_valid_witness(zeros, *wz));

  CHECK_FALSE(solve_dp(seq(3, {0, 0, 1, 1})));
  CHECK(solve_dp(seq(1, {0}))->indices == Idx{0});
  CHECK_FALSE(solve_dp(seq(4, {1, 2})));
  CHECK_THROWS_AS(solve_dp(seq(50, std::vector<std::int64_t>(99, 1)), 1000), ResourceLimitError);
}

TEST_CASE("dp and brute agree on existence, including short sequences") {
  SequenceRng rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const auto n = static_cast<std::int64_t>(1 + rng.below(8));
    const std::size_t m = rng.below(static_cast<std::uint64_t>(2 * n + 4));
    std::vector<std::int64_t> a(m);
    for (auto& x : a) x = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(n)));
    const auto s = seq(n, a);
    const auto b = solve_brute(s);
    const auto d = solve_dp(s);
    CHECK(b.has_value() == d.has_value());
    if (m <= 14) CHECK(b.has_value() == oracle::zero_sum_exists(n, a));
    if (b) CHECK(is_valid_witness(s, *b));
    if (d) CHECK(is_valid_witness(s, *d));
    if (m >= egz_bound(n)) CHECK(b.has_value());
  }
}

TEST_CASE("select_realizable_factor") {
  CHECK(select_realizable_factor(IntVec(2, {2, 0}), IntVec(2, {0, 2}), IntVec(2, {1, 2}), 0) == IntVec(2, {0, 2}));
  CHECK(select_realizable_factor(IntVec(3, {0, 3, 0}), IntVec(3, {0, 0, 3}), IntVec(3, {0, 3, 2}), 2) ==
        IntVec(3, {0, 3, 0}));
  // both realisable: first wins
  CHECK(select_realizable_factor(IntVec(3, {1, 1, 1}), IntVec(3, {1, 1, 1}), IntVec(3, {2, 2, 1}), 2) ==
        IntVec(3, {1, 1, 1}));
  // shape violations
  CHECK_THROWS_AS(select_realizable_factor(IntVec(2, {2, 0}), IntVec(2, {0, 2}), IntVec(2, {2, 2}), 0),
                  PreconditionError);
  CHECK_THROWS_AS(select_realizable_factor(IntVec(2, {1, 1}), IntVec(2, {1, 1}), IntVec(2, {1, 2}), 0),
                  PreconditionError);
  CHECK_THROWS_AS(select_realizable_factor(IntVec(2, {2, 0}), IntVec(2, {0, 2}), IntVec(2, {1, 2}), 2),
                  PreconditionError);
}

TEST_CASE("invariant route examples") {
  auto tr = solve_invariant_route_traced(seq(3, {1, 1, 1, 2, 2}));
  CHECK(tr.appended == 2);
  CHECK(tr.multiplicities == IntVec(3, {0, 3, 3}));
  CHECK(tr.factors == std::vector<IntVec>{IntVec(3, {0, 3, 0}), IntVec(3, {0, 0, 3})});
  CHECK(tr.selected == 0);
  CHECK(tr.witness.indices == Idx{0, 1, 2});

  tr = solve_invariant_route_traced(seq(2, {1, 1, 0}));
  CHECK(tr.appended == 0);
  CHECK(tr.multiplicities == IntVec(2, {2, 2}));
  CHECK(tr.factors == std::vector<IntVec>{IntVec(2, {2, 0}), IntVec(2, {0, 2})});
  CHECK(tr.selected == 1);
  CHECK(tr.witness.indices == Idx{0, 1});

  CHECK(solve_invariant_route(seq(1, {0})).indices == Idx{0});
  CHECK(solve_invariant_route(seq(1, {0, 0, 0})).indices == Idx{0});

  CHECK_THROWS_WITH_AS(solve_invariant_route(seq(3, {0, 0, 1, 1})), doctest::Contains("2n-1"), PreconditionError);
}

TEST_CASE("invariant route: containment, congruences and prefix sufficiency") {
  SequenceRng rng(77);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto n = static_cast<std::int64_t>(1 + rng.below(12));
    const std::size_t m = egz_bound(n) + rng.below(5);
    const auto s = random_sequence(n, m, rng.raw());
    const auto tr = solve_invariant_route_traced(s);
    CHECK(is_valid_witness(s, tr.witness));
    for (auto i : tr.witness.indices) CHECK(i < egz_bound(n));
    CHECK(tr.multiplicities.total() == 2 * n);
    CHECK(phi(tr.multiplicities).weighted_class == 0);
    CHECK(solve_invariant_route(s.prefix(egz_bound(n))) == tr.witness);
  }
}

TEST_CASE("sharpness of 2n-1") {
  for (std::int64_t n = 2; n <= 8; ++n) {
    CHECK_FALSE(solve_brute(sharpness(n)));
    CHECK_FALSE(solve_dp(sharpness(n)));
  }
}

TEST_CASE("random_sequence is deterministic and in range") {
  CHECK(random_sequence(3, 5, 1) == random_sequence(3, 5, 1));
  CHECK_FALSE(random_sequence(3, 5, 1) == random_sequence(3, 5, 2));
  const auto big = random_sequence(7, 1000, 42);
  for (auto e : big.elements()) {
    CHECK(e >= 0);
    CHECK(e < 7);
  }
  // The engine is the standard's MT19937-64: the 10000th draw from the
  // default seed 5489 is fixed by the C++ standard.
  SequenceRng rng(5489);
  std::uint64_t v = 0;
  for (int i = 0; i < 10000; ++i) v = rng.raw();
  CHECK(v == 9981545732273789042ULL);
}
