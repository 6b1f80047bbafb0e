#pragma once

#include <cstddef>

#include "manin/matrix.hpp"
#include "manin/ratvec.hpp"

namespace manin {

// Exact bilinear pairing between a left class space and a right class space:
// pair(x, y) = x^T M y. Intersection tables (divisors against curves, surfaces
// against surfaces) are PairingForms.
class PairingForm {
 public:
  PairingForm() = default;
  explicit PairingForm(RatMatrix matrix);

  static PairingForm identity(std::size_t n);

  std::size_t left_dim() const noexcept { return matrix_.rows(); }
  std::size_t right_dim() const noexcept { return matrix_.cols(); }
  const RatMatrix& matrix() const noexcept { return matrix_; }

  Rational pair(const RatVec& left, const RatVec& right) const;
  // The pairing with the roles of the two spaces exchanged.
  PairingForm transposed() const { return PairingForm(matrix_.transposed()); }
  bool is_square() const noexcept { return matrix_.is_square(); }
  bool is_nondegenerate() const;
  bool is_symmetric() const { return matrix_.is_symmetric(); }

  friend bool operator==(const PairingForm&, const PairingForm&) = default;

 private:
  RatMatrix matrix_;
};

}  // namespace manin
