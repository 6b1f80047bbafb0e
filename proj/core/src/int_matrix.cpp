#include "manin/int_matrix.hpp"


#include "manin/errors.hpp"

namespace manin {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : n_(rows.size()), data_() {
  data_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw InputError("integer matrix must be square");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (n_ != other.n_) throw InputError("integer matrix product: size mismatch");
  IntMatrix out(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) {
      std::int64_t sum = 0;
      for (std::size_t k = 0; k < n_; ++k) {
        std::int64_t term = 0;
        if (__builtin_mul_overflow((*this)(r, k), other(k, c), &term) || __builtin_add_overflow(sum, term, &sum))
          throw BoundExceeded("integer matrix product overflows int64");
      }
      out(r, c) = sum;
    }
  return out;
}

RatVec IntMatrix::operator*(const RatVec& v) const {
  if (v.dim() != n_) throw InputError("integer matrix action: dimension mismatch");
  RatVec out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    Rational sum = 0;
    for (std::size_t c = 0; c < n_; ++c)
      if ((*this)(r, c) != 0) sum += Rational(static_cast<long>((*this)(r, c))) * v[c];
    out[r] = sum;
  }
  return out;
}

RatMatrix IntMatrix::to_rational() const {
  RatMatrix m(n_, n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) m(r, c) = static_cast<long>((*this)(r, c));
  return m;
}

bool IntMatrix::is_identity() const { return *this == identity(n_); }

std::string IntMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < n_; ++r) {
    if (r) out += ';';
    for (std::size_t c = 0; c < n_; ++c) {
      if (c) out += ',';
      out += std::to_string((*this)(r, c));
    }
  }
  return out + "]";
}

}  // namespace manin
