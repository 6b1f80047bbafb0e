#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "manin/rational.hpp"

namespace manin {

// Exact rational coordinate vector in a fixed lattice basis. Divisor, curve
// and surface classes are all RatVecs; the basis they refer to is carried by
// whoever owns the vector.
class RatVec {
 public:
  RatVec() = default;
  explicit RatVec(std::size_t dim) : coords_(dim) {}
  explicit RatVec(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  RatVec(std::initializer_list<Rational> coords) : coords_(coords) {}

  static RatVec unit(std::size_t dim, std::size_t index);
  static RatVec from_ints(std::initializer_list<long> values);

  std::size_t dim() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Rational> coords() const noexcept { return coords_; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool is_zero() const;
  bool is_integral() const;

  // Positive multiple with coprime integer entries. Zero stays zero.
  // This is the canonical representative of the ray through the vector.
  RatVec primitive() const;

  // primitive(), then negated if needed so the first nonzero entry is
  // positive. Canonical representative of the line through the vector.
  RatVec canonical_direction() const;

  RatVec& operator+=(const RatVec& other);
  RatVec& operator-=(const RatVec& other);
  RatVec& operator*=(const Rational& scalar);

  friend RatVec operator+(RatVec lhs, const RatVec& rhs) { return lhs += rhs; }
  friend RatVec operator-(RatVec lhs, const RatVec& rhs) { return lhs -= rhs; }
  friend RatVec operator*(RatVec v, const Rational& s) { return v *= s; }
  friend RatVec operator*(const Rational& s, RatVec v) { return v *= s; }
  friend RatVec operator-(RatVec v) { return v *= Rational(-1); }

  friend bool operator==(const RatVec& a, const RatVec& b);
  // Lexicographic on coordinates; shorter vectors order first.
  friend std::strong_ordering operator<=>(const RatVec& a, const RatVec& b);

  // "(1,0,-1/2)"
  std::string to_string() const;

 private:
  std::vector<Rational> coords_;
};

// Standard dot product. Throws InputError on dimension mismatch.
Rational dot(const RatVec& a, const RatVec& b);

// Sorts and removes duplicates.
void sort_unique(std::vector<RatVec>& vectors);

}  // namespace manin
