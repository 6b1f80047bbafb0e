#include "manin/matrix.hpp"

#include <utility>

#include "manin/errors.hpp"

namespace manin {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(std::span<const RatVec> rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().dim();
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].dim() != cols) throw InputError("matrix rows have inconsistent dimensions");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::from_columns(std::span<const RatVec> cols, std::size_t rows) {
  return from_rows(cols, rows).transposed();
}

RatVec RatMatrix::row(std::size_t r) const {
  RatVec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

RatVec RatMatrix::column(std::size_t c) const {
  RatVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatVec RatMatrix::operator*(const RatVec& v) const {
  if (v.dim() != cols_) throw InputError("matrix-vector product: dimension mismatch");
  RatVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational sum = 0;
    for (std::size_t c = 0; c < cols_; ++c) sum += (*this)(r, c) * v[c];
    out[r] = sum;
  }
  return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows_) throw InputError("matrix product: dimension mismatch");
  RatMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (sgn((*this)(r, k)) == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += (*this)(r, k) * other(k, c);
    }
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("matrix difference: shape mismatch");
  RatMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

RatMatrix RatMatrix::rref(std::vector<std::size_t>* pivots) const {
  RatMatrix m(*this);
  std::vector<std::size_t> piv;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < cols_ && lead_row < rows_; ++c) {
    std::size_t p = lead_row;
    while (p < rows_ && sgn(m(p, c)) == 0) ++p;
    if (p == rows_) continue;
    if (p != lead_row)
      for (std::size_t k = 0; k < cols_; ++k) std::swap(m(p, k), m(lead_row, k));
    const Rational inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < cols_; ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t k = c; k < cols_; ++k) m(r, k) -= f * m(lead_row, k);
    }
    piv.push_back(c);
    ++lead_row;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::size_t RatMatrix::rank() const {
  // Fraction-free forward elimination is enough for the rank.
  RatMatrix m(*this);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t p = rank;
    while (p < rows_ && sgn(m(p, c)) == 0) ++p;
    if (p == rows_) continue;
    if (p != rank)
      for (std::size_t k = 0; k < cols_; ++k) std::swap(m(p, k), m(rank, k));
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      const Rational f = m(r, c) / m(rank, c);
      for (std::size_t k = c; k < cols_; ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

std::vector<RatVec> RatMatrix::nullspace() const {
  std::vector<std::size_t> pivots;
  const RatMatrix r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols_);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> RatMatrix::solve(const RatVec& b) const {
  if (b.dim() != rows_) throw InputError("linear solve: dimension mismatch");
  RatMatrix aug(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
    aug(r, cols_) = b[r];
  }
  std::vector<std::size_t> pivots;
  const RatMatrix red = aug.rref(&pivots);
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
  if (pivots.size() != cols_) return std::nullopt;                     // not unique
  RatVec x(cols_);
  for (std::size_t i = 0; i < cols_; ++i) x[i] = red(i, cols_);
  return x;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
  if (!is_square()) return std::nullopt;
  const std::size_t n = rows_;
  RatMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
    aug(r, n + r) = 1;
  }
  std::vector<std::size_t> pivots;
  const RatMatrix red = aug.rref(&pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red(r, n + c);
  return inv;
}

Rational RatMatrix::determinant() const {
  if (!is_square()) throw InputError("determinant of a non-square matrix");
  RatMatrix m(*this);
  Rational det = 1;
  const std::size_t n = rows_;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

std::size_t rank_of(std::span<const RatVec> vectors) {
  if (vectors.empty()) return 0;
  return RatMatrix::from_rows(vectors).rank();
}

std::vector<RatVec> span_basis(std::span<const RatVec> vectors, std::size_t dim) {
  std::vector<std::size_t> pivots;
  const RatMatrix r = RatMatrix::from_rows(vectors, dim).rref(&pivots);
  std::vector<RatVec> basis;
  for (std::size_t i = 0; i < pivots.size(); ++i) basis.push_back(r.row(i));
  return basis;
}

}  // namespace manin
