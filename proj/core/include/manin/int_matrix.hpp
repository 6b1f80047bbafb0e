#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "manin/matrix.hpp"
#include "manin/ratvec.hpp"

namespace manin {

// Square integer matrix acting on column coordinate vectors (x -> A x).
// Used for finite group actions on Neron-Severi lattices; products throw
// BoundExceeded if an entry leaves the int64 range.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }

  IntMatrix operator*(const IntMatrix& other) const;
  RatVec operator*(const RatVec& v) const;
  RatMatrix to_rational() const;
  bool is_identity() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> data_;
};

}  // namespace manin
