#include "egzkit/compositions.hpp"

#include "egzkit/arith.hpp"
#include "egzkit/errors.hpp"

namespace egzkit {

WeakCompositions::WeakCompositions(std::int64_t total, std::size_t parts) : cur_(parts, 0) {
  if (parts == 0) throw PreconditionError("compositions need at least one part");
  if (total < 0) throw PreconditionError("composition total must be nonnegative");
  cur_[0] = total;
}

bool WeakCompositions::next() {
  const std::size_t k = cur_.size();
  if (k < 2) return false;
  // Rightmost nonzero entry among positions 0..k-2.
  std::size_t i = k - 1;
  while (i-- > 0) {
    if (cur_[i] > 0) break;
  }
  if (i == static_cast<std::size_t>(-1)) return false;
  std::int64_t tail = 0;
  for (std::size_t j = i + 1; j < k; ++j) {
    tail += cur_[j];
    cur_[j] = 0;
  }
  --cur_[i];
  cur_[i + 1] = tail + 1;
  return true;
}

std::uint64_t weak_composition_count(std::int64_t total, std::size_t parts, std::uint64_t cap) {
  if (parts == 0 || total < 0) return 0;
  return binomial_capped(static_cast<std::uint64_t>(total) + parts - 1, parts - 1, cap);
}

}  // namespace egzkit
