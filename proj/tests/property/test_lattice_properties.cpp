#include <gtest/gtest.h>

#include <algorithm>

#include "manin/delpezzo.hpp"
#include "manin/fujita.hpp"
#include "manin/int_matrix.hpp"
#include "oracles.hpp"

using namespace manin;

namespace {

std::vector<RatVec> classes_of(const std::vector<CurveClass>& cs) {
  std::vector<RatVec> out;
  for (const auto& c : cs) out.push_back(c.cls);
  std::sort(out.begin(), out.end());
  return out;
}

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(LatticeProperties, ReflectionsPermuteEnumeratedSets) {
  for (int n = 3; n <= 8; ++n) {
    const DPLattice lat(n);
    const auto ones = classes_of(enumerate_minus_one(lat));
    const auto roots = classes_of(enumerate_minus_two(lat));
    for (const IntMatrix& s : simple_reflections(lat)) {
      std::vector<RatVec> a, b;
      for (const auto& x : ones) a.push_back(s * x);
      for (const auto& x : roots) b.push_back(s * x);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      EXPECT_EQ(a, ones) << "n = " << n;
      EXPECT_EQ(b, roots) << "n = " << n;
      EXPECT_EQ(s * lat.canonical(), lat.canonical());
    }
  }
}

TEST(LatticeProperties, EnumerationMatchesWideOracle) {
  for (int n = 1; n <= 8; ++n) {
    const DPLattice lat(n);
    EXPECT_EQ(classes_of(enumerate_minus_one(lat)), oracle::lattice_classes(n, -1, -1, default_enumeration_bound(n, -1, -1) + 4)) << "n = " << n;
    EXPECT_EQ(classes_of(enumerate_minus_two(lat)), oracle::lattice_classes(n, -2, 0, default_enumeration_bound(n, -2, 0) + 4)) << "n = " << n;
  }
}

TEST(LatticeProperties, BlowDownRaisesDegree) {
  for (int n = 3; n <= 8; ++n) {
    const DPLattice lat(n);
    for (const auto& c : enumerate_minus_one(lat)) {
      const DPLattice down = blow_down(lat, c);
      EXPECT_EQ(down.n(), n - 1);
      EXPECT_EQ(down.degree(), lat.degree() + 1);
      const IntMatrix g = exceptional_basis_change(lat, c);
      EXPECT_EQ(g * c.cls, RatVec::unit(lat.rank(), lat.rank() - 1));
      EXPECT_EQ(g * lat.canonical(), lat.canonical());
    }
  }
}

TEST(FujitaProperties, VerdictsAreMonotone) {
  const std::vector<Rational> grid{Rational(1), Rational(2), Rational(5, 2), Rational(3), Rational(7, 2),
                                   Rational(9), Rational(10), Rational(64), Rational(65), Rational(100)};
  for (int dim = 1; dim <= 3; ++dim)
    for (const auto& vol : grid)
      for (const auto& curve : grid)
        for (const auto& surf : grid) {
          const GeometricWitness w{dim, vol, curve, curve, surf};
          if (!bigness_criterion(w).implies_big()) continue;
          for (const auto& bump : {Rational(1, 3), Rational(1), Rational(50)}) {
            EXPECT_TRUE(bigness_criterion({dim, vol + bump, curve, curve, surf}).implies_big());
            EXPECT_TRUE(bigness_criterion({dim, vol, curve + bump, curve, surf}).implies_big());
            EXPECT_TRUE(bigness_criterion({dim, vol, curve, curve, surf + bump}).implies_big());
          }
        }
  for (const auto& vol : grid)
    for (const auto& deg : grid) {
      if (!bigness_dim3_improved({3, vol, std::nullopt, deg, std::nullopt}).implies_big()) continue;
      EXPECT_TRUE(bigness_dim3_improved({3, vol + 1, std::nullopt, deg, std::nullopt}).implies_big());
      EXPECT_TRUE(bigness_dim3_improved({3, vol, std::nullopt, deg + 1, std::nullopt}).implies_big());
    }
  for (const auto& deg : grid)
    if (surface_rational_curve_criterion(deg).implies_big())
      EXPECT_TRUE(surface_rational_curve_criterion(deg + Rational(1, 7)).implies_big());
}

TEST(FujitaProperties, CoverBoundsCompose) {
  for (long d = 1; d <= 9; ++d) {
    EXPECT_EQ(surface_cover_a_bound(d, 1).bound_sq, Rational(9) / d);
    for (long e1 = 1; e1 <= 6; ++e1)
      for (long e2 = 1; e2 <= 6; ++e2)
        EXPECT_EQ(surface_cover_a_bound(d, e1 * e2).bound_sq, surface_cover_a_bound(d * e1, e2).bound_sq);
    for (long e = 1; e <= 10; ++e) {
      const CoverBBound b = weak_dp_cover_b_bound(d, e);
      EXPECT_EQ(b.feasible, d * e <= 9);
      if (b.feasible) EXPECT_EQ(b.b_upper + d * e, 10);
      EXPECT_EQ(surface_cover_a_bound(d, e).strongly_a_unbalanced_excluded, d * e > 9);
    }
  }
}

TEST(FujitaProperties, BinomialHilbertValues) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<Rational> values;
    for (long r = 1; r <= n + 1; ++r) values.emplace_back(binomial(r - 1, n));
    const HilbertCheck h = adjoint_hilbert_check(n, values);
    EXPECT_EQ(h.top_intersection, Rational(1)) << "n = " << n;
    EXPECT_TRUE(h.matches_projective);
    EXPECT_EQ(h.coefficients, oracle::interpolate(values));
    // Shifted binomials P(r) = C(r + k, n) are degree n with the same leading term.
    for (long k = 0; k <= 3; ++k) {
      std::vector<Rational> shifted;
      for (long r = 1; r <= n + 1; ++r) shifted.emplace_back(binomial(r + k, n));
      EXPECT_EQ(adjoint_hilbert_check(n, shifted).top_intersection, Rational(1));
    }
  }
}
