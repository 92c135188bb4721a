#include "egzkit/int_vec.hpp"

#include <algorithm>
#include <functional>

#include "egzkit/arith.hpp"
#include "egzkit/errors.hpp"

namespace egzkit {

namespace {

void check_shape(std::int64_t modulus, std::size_t len) {
  if (modulus < 1) {
    throw DomainError("modulus must be >= 1, got " + std::to_string(modulus));
  }
  if (len != static_cast<std::size_t>(modulus)) {
    throw PreconditionError("vector of length " + std::to_string(len) +
                            " does not match modulus " + std::to_string(modulus));
  }
}

}  // namespace

IntVec::IntVec(std::int64_t modulus)
    : modulus_(modulus), coords_(modulus > 0 ? static_cast<std::size_t>(modulus) : 0, 0) {
  check_shape(modulus_, coords_.size());
}

IntVec::IntVec(std::int64_t modulus, std::vector<std::int64_t> coords)
    : modulus_(modulus), coords_(std::move(coords)) {
  check_shape(modulus_, coords_.size());
}

IntVec::IntVec(std::int64_t modulus, std::initializer_list<std::int64_t> coords)
    : IntVec(modulus, std::vector<std::int64_t>(coords)) {}

IntVec IntVec::unit(std::int64_t modulus, std::size_t i) {
  IntVec v(modulus);
  v.coords_.at(i) = 1;
  return v;
}

std::int64_t IntVec::total() const {
  std::int64_t s = 0;
  for (auto c : coords_) s = checked_add(s, c);
  return s;
}

bool IntVec::nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c >= 0; });
}

bool IntVec::dominated_by(const IntVec& other) const {
  if (other.modulus_ != modulus_) return false;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] > other.coords_[i]) return false;
  }
  return true;
}

IntVec& IntVec::operator+=(const IntVec& rhs) {
  if (rhs.modulus_ != modulus_) throw PreconditionError("modulus mismatch in vector addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_add(coords_[i], rhs.coords_[i]);
  return *this;
}

IntVec& IntVec::operator-=(const IntVec& rhs) {
  if (rhs.modulus_ != modulus_) throw PreconditionError("modulus mismatch in vector subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_sub(coords_[i], rhs.coords_[i]);
  return *this;
}

IntVec operator*(std::int64_t k, const IntVec& v) {
  IntVec r = v;
  for (auto& c : r.coords_) c = checked_mul(k, c);
  return r;
}

std::strong_ordering operator<=>(const IntVec& a, const IntVec& b) {
  if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(),
                                                b.coords_.begin(), b.coords_.end());
}

std::string IntVec::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

std::size_t IntVecHash::operator()(const IntVec& v) const noexcept {
  // FNV-1a over the coordinates.
  std::uint64_t h = 1469598103934665603ULL;
  for (auto c : v.coords()) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace egzkit
