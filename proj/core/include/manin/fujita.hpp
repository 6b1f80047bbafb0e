#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "manin/rational.hpp"

namespace manin {

// Numerical data of a big and nef Q-divisor L on a smooth projective variety
// of dimension 1, 2 or 3. Curve and surface degrees are the asserted infima
// over curves (rational curves, surfaces) through a general point.
struct GeometricWitness {
  int dim = 0;
  Rational vol_L;
  std::optional<Rational> min_curve_deg;
  std::optional<Rational> min_rational_curve_deg;
  std::optional<Rational> min_surface_vol;
};

enum class BignessStatus { implies_big, inconclusive };

struct Verdict {
  BignessStatus status = BignessStatus::inconclusive;
  std::string cited_rule;

  bool implies_big() const noexcept { return status == BignessStatus::implies_big; }
};

std::string to_string(BignessStatus s);

// Sufficient conditions for K_X + L to be big, by dimension:
//   dim 1: Vol(L) > 2
//   dim 2: Vol(L) > 9 and L.C > 2
//   dim 3: Vol(L) > 64, L^2.S > 9 and L.C > 2
// Throws InputError if a field required by the dimension is missing or a
// provided value is not positive.
Verdict bigness_criterion(const GeometricWitness& w);

// Threefolds: Vol(L) > 64 and L.C > 3 for every rational curve.
Verdict bigness_dim3_improved(const GeometricWitness& w);

// Surfaces: L.C > 3 for every rational curve through a general point.
Verdict surface_rational_curve_criterion(const Rational& min_rational_curve_deg);

enum class RigidVolumeStatus { consistent, violates };
std::string to_string(RigidVolumeStatus s);

// Rigid adjoint divisor on a surface forces Vol(L) <= 9 / a^2; checked as
// a^2 Vol(L) <= 9.
RigidVolumeStatus rigid_surface_volume_check(const Rational& a, const Rational& vol);

struct CoverABound {
  // Upper bound on a(Y, pi^*L)^2 for a degree-e cover of a degree-d weak del
  // Pezzo surface with L = -K: 9 / (d e).
  Rational bound_sq;
  // bound_sq < 1, i.e. the cover cannot keep a = 1 with a rigid adjoint.
  bool strongly_a_unbalanced_excluded = false;
};

CoverABound surface_cover_a_bound(long d, long e);

struct CoverBBound {
  bool feasible = false;  // d e <= 9
  long b_upper = 0;       // 10 - d e when feasible
  bool balanced_forced = false;
};

// Degree-e cover Y -> S of a smooth weak del Pezzo surface of degree d with
// rigid adjoint: d e = (f^*L)^2 <= d' <= 9 and b(Y) = rho(Y') = 10 - d'.
// Throws InputError unless 1 <= d <= 9 and e >= 1.
CoverBBound weak_dp_cover_b_bound(long d, long e);

struct HilbertCheck {
  // Coefficients of the interpolating polynomial, constant term first.
  std::vector<Rational> coefficients;
  Rational top_intersection;  // n! * leading coefficient
  bool matches_projective = false;
  bool matches_quadric = false;
};

// `values` are P(1), ..., P(n+1) for P(r) = h^0(K + rH) on an n-fold.
// Throws InputError unless exactly n + 1 values are given.
HilbertCheck adjoint_hilbert_check(int n, const std::vector<Rational>& values);

}  // namespace manin
