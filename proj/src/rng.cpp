#include "egzkit/rng.hpp"

#include "egzkit/errors.hpp"

namespace egzkit {

std::uint64_t SequenceRng::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("empty range");
  // Accept draws below the largest multiple of bound representable in 64
  // bits: 2^64 - (2^64 mod bound).
  const std::uint64_t reject_from = -(-bound % bound);
  for (;;) {
    const std::uint64_t x = engine_();
    if (reject_from == 0 || x < reject_from) return x % bound;
  }
}

ResidueSequence random_sequence(std::int64_t n, std::size_t m, std::uint64_t seed) {
  if (n < 1) throw DomainError("modulus must be >= 1, got " + std::to_string(n));
  SequenceRng rng(seed);
  std::vector<std::int64_t> out(m);
  for (auto& e : out) e = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(n)));
  return ResidueSequence(n, std::move(out));
}

}  // namespace egzkit
