#include <gtest/gtest.h>

#include "manin/errors.hpp"
#include "manin/fujita.hpp"
#include "oracles.hpp"

using namespace manin;

namespace {

GeometricWitness witness(int dim, long vol, std::optional<long> curve = std::nullopt,
                         std::optional<long> surface = std::nullopt, std::optional<long> rational = std::nullopt) {
  GeometricWitness w;
  w.dim = dim;
  w.vol_L = vol;
  if (curve) w.min_curve_deg = Rational(*curve);
  if (surface) w.min_surface_vol = Rational(*surface);
  if (rational) w.min_rational_curve_deg = Rational(*rational);
  return w;
}

std::vector<Rational> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST(Fujita, BignessCriterionIsStrict) {
  EXPECT_FALSE(bigness_criterion(witness(1, 2)).implies_big());
  EXPECT_TRUE(bigness_criterion(witness(1, 3)).implies_big());
  EXPECT_TRUE(bigness_criterion(witness(2, 10, 3)).implies_big());
  EXPECT_FALSE(bigness_criterion(witness(2, 9, 3)).implies_big());
  EXPECT_FALSE(bigness_criterion(witness(2, 10, 2)).implies_big());
  EXPECT_TRUE(bigness_criterion(witness(3, 65, 3, 10)).implies_big());
  EXPECT_FALSE(bigness_criterion(witness(3, 64, 3, 10)).implies_big());
  EXPECT_FALSE(bigness_criterion(witness(3, 65, 3, 9)).implies_big());
  EXPECT_FALSE(bigness_criterion(witness(3, 65, 2, 10)).implies_big());
  EXPECT_FALSE(bigness_criterion(witness(1, 2)).cited_rule.empty());
}

TEST(Fujita, BignessCriterionValidatesWitness) {
  EXPECT_THROW(bigness_criterion(witness(2, 10)), InputError);
  EXPECT_THROW(bigness_criterion(witness(3, 65, 3)), InputError);
  EXPECT_THROW(bigness_criterion(witness(4, 65, 3, 10)), InputError);
  EXPECT_THROW(bigness_criterion(witness(1, 0)), InputError);
}

TEST(Fujita, ImprovedThreefoldCriterion) {
  EXPECT_TRUE(bigness_dim3_improved(witness(3, 65, {}, {}, 4)).implies_big());
  EXPECT_FALSE(bigness_dim3_improved(witness(3, 64, {}, {}, 10)).implies_big());
  EXPECT_FALSE(bigness_dim3_improved(witness(3, 100, {}, {}, 3)).implies_big());
  EXPECT_THROW(bigness_dim3_improved(witness(3, 100)), InputError);
  EXPECT_THROW(bigness_dim3_improved(witness(2, 100, {}, {}, 4)), InputError);
}

TEST(Fujita, SurfaceRationalCurveCriterion) {
  EXPECT_TRUE(surface_rational_curve_criterion(4).implies_big());
  EXPECT_FALSE(surface_rational_curve_criterion(3).implies_big());
  EXPECT_TRUE(surface_rational_curve_criterion(Rational(7, 2)).implies_big());
}

TEST(Fujita, RigidSurfaceVolume) {
  EXPECT_EQ(rigid_surface_volume_check(1, 9), RigidVolumeStatus::consistent);
  EXPECT_EQ(rigid_surface_volume_check(3, 1), RigidVolumeStatus::consistent);
  EXPECT_EQ(rigid_surface_volume_check(2, 3), RigidVolumeStatus::violates);
}

TEST(Fujita, CoverABound) {
  const CoverABound r = surface_cover_a_bound(5, 2);
  EXPECT_EQ(r.bound_sq, Rational(9, 10));
  EXPECT_TRUE(r.strongly_a_unbalanced_excluded);
  EXPECT_EQ(surface_cover_a_bound(9, 1).bound_sq, Rational(1));
  EXPECT_FALSE(surface_cover_a_bound(9, 1).strongly_a_unbalanced_excluded);
  EXPECT_EQ(surface_cover_a_bound(1, 2).bound_sq, Rational(9, 2));
  EXPECT_FALSE(surface_cover_a_bound(1, 2).strongly_a_unbalanced_excluded);
}

TEST(Fujita, CoverBBound) {
  const CoverBBound r = weak_dp_cover_b_bound(4, 2);
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.b_upper, 2);
  EXPECT_TRUE(r.balanced_forced);
  EXPECT_FALSE(weak_dp_cover_b_bound(8, 2).feasible);
  const CoverBBound id = weak_dp_cover_b_bound(3, 1);
  EXPECT_EQ(id.b_upper, 7);
  EXPECT_FALSE(id.balanced_forced);
  EXPECT_THROW(weak_dp_cover_b_bound(10, 1), InputError);
  EXPECT_THROW(weak_dp_cover_b_bound(0, 1), InputError);
}

TEST(Fujita, HilbertPatterns) {
  const HilbertCheck p2 = adjoint_hilbert_check(2, ints({0, 0, 1}));
  EXPECT_EQ(p2.top_intersection, Rational(1));
  EXPECT_TRUE(p2.matches_projective);
  EXPECT_FALSE(p2.matches_quadric);

  const HilbertCheck q2 = adjoint_hilbert_check(2, ints({0, 1, 4}));
  EXPECT_EQ(q2.top_intersection, Rational(2));
  EXPECT_TRUE(q2.matches_quadric);
  EXPECT_EQ(q2.coefficients, oracle::interpolate(ints({0, 1, 4})));

  const HilbertCheck line = adjoint_hilbert_check(1, ints({0, 1}));
  EXPECT_EQ(line.top_intersection, Rational(1));
  EXPECT_THROW(adjoint_hilbert_check(2, ints({0, 1})), InputError);
}
