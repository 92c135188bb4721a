#pragma once

#include <cstdint>
#include <vector>

namespace egzkit {

/// Weak compositions of `total` into `parts` nonnegative parts, visited in
/// descending lexicographic order: (total,0,...,0) first, (0,...,0,total)
/// last.
///
///   WeakCompositions it(total, parts);
///   do { use(it.current()); } while (it.next());
class WeakCompositions {
 public:
  WeakCompositions(std::int64_t total, std::size_t parts);

  const std::vector<std::int64_t>& current() const { return cur_; }
  /// Advance; false once the last composition has been visited.
  bool next();

 private:
  std::vector<std::int64_t> cur_;
};

/// Number of weak compositions, C(total + parts - 1, parts - 1), capped at
/// `cap`.
std::uint64_t weak_composition_count(std::int64_t total, std::size_t parts, std::uint64_t cap);

}  // namespace egzkit
