#include "manin/pairing.hpp"

#include "manin/errors.hpp"

namespace manin {

PairingForm::PairingForm(RatMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() == 0 || matrix_.cols() == 0) throw InputError("pairing must have positive dimensions");
}

PairingForm PairingForm::identity(std::size_t n) { return PairingForm(RatMatrix::identity(n)); }

Rational PairingForm::pair(const RatVec& left, const RatVec& right) const {
  if (left.dim() != left_dim() || right.dim() != right_dim()) {
    throw InputError("pairing: expected classes of dims " + std::to_string(left_dim()) + " and " +
                     std::to_string(right_dim()) + ", got " + std::to_string(left.dim()) + " and " +
                     std::to_string(right.dim()));
  }
  return dot(left, matrix_ * right);
}

bool PairingForm::is_nondegenerate() const { return is_square() && sgn(matrix_.determinant()) != 0; }

}  // namespace manin
