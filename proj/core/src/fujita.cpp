#include "manin/fujita.hpp"

#include "manin/errors.hpp"

namespace manin {
namespace {

const Rational& require(const std::optional<Rational>& field, const char* name, int dim) {
  if (!field) throw InputError(std::string("dimension ") + std::to_string(dim) + " criterion requires " + name);
  return *field;
}

void require_positive(const std::optional<Rational>& field, const char* name) {
  if (field && sgn(*field) <= 0) throw InputError(std::string(name) + " must be positive");
}

void check_witness(const GeometricWitness& w) {
  if (w.dim < 1 || w.dim > 3) throw InputError("witness dimension must be 1, 2 or 3");
  if (sgn(w.vol_L) <= 0) throw InputError("vol_L must be positive");
  require_positive(w.min_curve_deg, "min_curve_deg");
  require_positive(w.min_rational_curve_deg, "min_rational_curve_deg");
  require_positive(w.min_surface_vol, "min_surface_vol");
}

Verdict verdict(bool holds, std::string rule) {
  return {holds ? BignessStatus::implies_big : BignessStatus::inconclusive, std::move(rule)};
}

}  // namespace

std::string to_string(BignessStatus s) {
  return s == BignessStatus::implies_big ? "implies_big" : "inconclusive";
}

std::string to_string(RigidVolumeStatus s) {
  return s == RigidVolumeStatus::consistent ? "consistent" : "violates";
}

Verdict bigness_criterion(const GeometricWitness& w) {
  check_witness(w);
  switch (w.dim) {
    case 1:
      return verdict(w.vol_L > 2, "dim 1: Vol(L) > 2");
    case 2: {
      const Rational& curve = require(w.min_curve_deg, "min_curve_deg", 2);
      return verdict(w.vol_L > 9 && curve > 2, "dim 2: Vol(L) > 9 and L.C > 2");
    }
    default: {
      const Rational& curve = require(w.min_curve_deg, "min_curve_deg", 3);
      const Rational& surface = require(w.min_surface_vol, "min_surface_vol", 3);
      return verdict(w.vol_L > 64 && surface > 9 && curve > 2, "dim 3: Vol(L) > 64, L^2.S > 9 and L.C > 2");
    }
  }
}

Verdict bigness_dim3_improved(const GeometricWitness& w) {
  check_witness(w);
  if (w.dim != 3) throw InputError("improved criterion applies to threefolds only");
  const Rational& rational_curve = require(w.min_rational_curve_deg, "min_rational_curve_deg", 3);
  return verdict(w.vol_L > 64 && rational_curve > 3, "dim 3: Vol(L) > 64 and L.C > 3 for rational C");
}

Verdict surface_rational_curve_criterion(const Rational& min_rational_curve_deg) {
  if (sgn(min_rational_curve_deg) <= 0) throw InputError("min_rational_curve_deg must be positive");
  return verdict(min_rational_curve_deg > 3, "dim 2: L.C > 3 for rational C");
}

RigidVolumeStatus rigid_surface_volume_check(const Rational& a, const Rational& vol) {
  if (sgn(a) <= 0 || sgn(vol) <= 0) throw InputError("a and vol must be positive");
  return a * a * vol <= 9 ? RigidVolumeStatus::consistent : RigidVolumeStatus::violates;
}

CoverABound surface_cover_a_bound(long d, long e) {
  if (d < 1 || e < 1) throw InputError("degrees must be positive");
  CoverABound out;
  out.bound_sq = Rational(9) / Rational(d * e);
  out.strongly_a_unbalanced_excluded = out.bound_sq < 1;
  return out;
}

CoverBBound weak_dp_cover_b_bound(long d, long e) {
  if (d < 1 || d > 9) throw InputError("del Pezzo degree must be in 1..9");
  if (e < 1) throw InputError("cover degree must be positive");
  CoverBBound out;
  out.feasible = d * e <= 9;
  if (out.feasible) {
    out.b_upper = 10 - d * e;
    out.balanced_forced = e >= 2 && out.b_upper < 10 - d;
  }
  return out;
}

HilbertCheck adjoint_hilbert_check(int n, const std::vector<Rational>& values) {
  if (n < 1) throw InputError("dimension must be positive");
  if (values.size() != static_cast<std::size_t>(n) + 1)
    throw InputError("expected " + std::to_string(n + 1) + " values P(1)..P(n+1), got " +
                     std::to_string(values.size()));

  // Newton form on the nodes r = 1..n+1, expanded into the monomial basis.
  std::vector<Rational> diffs(values);
  std::vector<Rational> newton;
  for (int level = 0; level <= n; ++level) {
    newton.push_back(diffs[0]);
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = (diffs[i + 1] - diffs[i]) / (level + 1);
    diffs.pop_back();
  }
  // P(r) = sum_k newton[k] * prod_{j<k} (r - (j+1))
  std::vector<Rational> coeffs(n + 1, Rational(0));
  std::vector<Rational> basis{Rational(1)};  // prod_{j<k} (r - (j+1))
  for (int k = 0; k <= n; ++k) {
    for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += newton[k] * basis[i];
    std::vector<Rational> next(basis.size() + 1, Rational(0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      next[i + 1] += basis[i];
      next[i] -= basis[i] * (k + 1);
    }
    basis = std::move(next);
  }

  HilbertCheck out;
  out.coefficients = coeffs;
  Rational factorial = 1;
  for (int i = 2; i <= n; ++i) factorial *= i;
  out.top_intersection = factorial * coeffs[n];

  bool leading_zeros = true;
  for (int i = 0; i + 1 < n; ++i) leading_zeros = leading_zeros && sgn(values[i]) == 0;
  out.matches_projective = leading_zeros && sgn(values[n - 1]) == 0 && values[n] == 1;
  out.matches_quadric = leading_zeros && values[n - 1] == 1 && values[n] == n + 2;
  return out;
}

}  // namespace manin
