#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace egzkit {

/// A length-n integer vector tagged with its modulus n. Used for lattice
/// elements, generator vectors and weight-class multiplicity vectors alike.
class IntVec {
 public:
  /// Zero vector of length `modulus`.
  explicit IntVec(std::int64_t modulus);
  IntVec(std::int64_t modulus, std::vector<std::int64_t> coords);
  IntVec(std::int64_t modulus, std::initializer_list<std::int64_t> coords);

  /// Standard basis vector e_i.
  static IntVec unit(std::int64_t modulus, std::size_t i);

  std::int64_t modulus() const { return modulus_; }
  std::size_t size() const { return coords_.size(); }
  std::span<const std::int64_t> coords() const { return coords_; }
  const std::vector<std::int64_t>& values() const { return coords_; }

  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }

  /// Sum of coordinates (overflow-checked).
  std::int64_t total() const;
  bool nonnegative() const;
  /// Componentwise a <= b.
  bool dominated_by(const IntVec& other) const;

  IntVec& operator+=(const IntVec& rhs);
  IntVec& operator-=(const IntVec& rhs);
  friend IntVec operator+(IntVec lhs, const IntVec& rhs) { return lhs += rhs; }
  friend IntVec operator-(IntVec lhs, const IntVec& rhs) { return lhs -= rhs; }
  friend IntVec operator*(std::int64_t k, const IntVec& v);

  friend bool operator==(const IntVec&, const IntVec&) = default;
  /// Lexicographic on coordinates; vectors of different modulus compare by
  /// modulus first.
  friend std::strong_ordering operator<=>(const IntVec& a, const IntVec& b);

  std::string to_string() const;

 private:
  std::int64_t modulus_;
  std::vector<std::int64_t> coords_;
};

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept;
};

}  // namespace egzkit
