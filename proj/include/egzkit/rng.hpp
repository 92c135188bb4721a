#pragma once

#include <cstdint>
#include <random>

#include "egzkit/egz.hpp"

namespace egzkit {

/// Seeded source for reproducible test sequences. The engine is MT19937-64
/// (std::mt19937_64, whose output is fixed by the C++ standard); range
/// reduction is plain rejection sampling so results do not depend on the
/// standard library's distribution implementations.
class SequenceRng {
 public:
  static constexpr const char* kName = "mt19937_64";

  explicit SequenceRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound). Requires bound >= 1.
  std::uint64_t below(std::uint64_t bound);

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// m residues mod n drawn from SequenceRng(seed).
ResidueSequence random_sequence(std::int64_t n, std::size_t m, std::uint64_t seed);

}  // namespace egzkit
