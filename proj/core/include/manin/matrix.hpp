#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "manin/rational.hpp"
#include "manin/ratvec.hpp"

namespace manin {

// Dense row-major matrix over Q.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  // Rows taken from `rows`; all must share one dimension. `cols` is used
  // when `rows` is empty.
  static RatMatrix from_rows(std::span<const RatVec> rows, std::size_t cols = 0);
  static RatMatrix from_columns(std::span<const RatVec> cols, std::size_t rows = 0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  RatVec row(std::size_t r) const;
  RatVec column(std::size_t c) const;
  RatMatrix transposed() const;

  RatVec operator*(const RatVec& v) const;
  RatMatrix operator*(const RatMatrix& other) const;
  RatMatrix operator-(const RatMatrix& other) const;
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  std::size_t rank() const;
  // Reduced row echelon form; `pivots` receives pivot column indices.
  RatMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  // Basis of {x : A x = 0}, one vector per free column, read off the RREF.
  // The basis is therefore canonical for the subspace.
  std::vector<RatVec> nullspace() const;
  // Unique solution of A x = b when A has full column rank and the system
  // is consistent; nullopt otherwise.
  std::optional<RatVec> solve(const RatVec& b) const;
  std::optional<RatMatrix> inverse() const;
  Rational determinant() const;
  bool is_symmetric() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t rank_of(std::span<const RatVec> vectors);
// Canonical basis (RREF rows) of the span of `vectors`, all of dim `dim`.
std::vector<RatVec> span_basis(std::span<const RatVec> vectors, std::size_t dim);

}  // namespace manin
