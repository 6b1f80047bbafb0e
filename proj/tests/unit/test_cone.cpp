#include <gtest/gtest.h>

#include "manin/cone.hpp"
#include "manin/errors.hpp"
#include "oracles.hpp"

using namespace manin;

namespace {

RatVec v(std::initializer_list<long> xs) { return RatVec::from_ints(xs); }

PairingForm div_curve() {
  const std::vector<RatVec> rows{v({0, 1, 1}), v({1, 0, 1}), v({0, 0, 1})};
  return PairingForm(RatMatrix::from_rows(rows));
}

// Divisor cones of the Hilbert scheme of two points on P1 x P1 in the basis
// (H1[2], H2[2], E); curves in the basis (F1, F2, R).
const RatVec E = v({0, 0, 1}), D1 = v({1, 0, -1}), D2 = v({0, 1, -1});
const RatVec H1 = v({1, 0, 0}), H2 = v({0, 1, 0}), X11 = v({1, 1, -1});
const RatVec F1 = v({1, 0, 0}), F2 = v({0, 1, 0}), R = v({0, 0, 1});
const RatVec C = v({1, 1, -1}), J1 = v({0, -1, 1}), J2 = v({-1, 0, 1});

}  // namespace

TEST(Cone, OctantIsSelfDual) {
  const PolyCone oct = PolyCone::from_generators({v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})}, PairingForm::identity(3));
  EXPECT_EQ(oct.facets(), oct.generators());
  EXPECT_EQ(dual_cone(oct).generators(), oct.generators());
  EXPECT_TRUE(contains(oct, v({1, 1, 1})));
  EXPECT_TRUE(contains(oct, v({0, 0, 0})));
  EXPECT_FALSE(contains(oct, v({1, -1, 0})));
}

TEST(Cone, RedundantGeneratorRemoved) {
  const PolyCone c = PolyCone::from_generators({v({1, 0}), v({1, 1}), v({1, 2})}, PairingForm::identity(2));
  EXPECT_EQ(c.generators(), (std::vector<RatVec>{v({1, 0}), v({1, 2})}));
  EXPECT_FALSE(c.is_extreme_ray(v({1, 1})));
  EXPECT_TRUE(c.is_extreme_ray(v({2, 4})));
}

TEST(Cone, GeneratorsAreCanonicalAndSorted) {
  const PolyCone c = PolyCone::from_generators({v({0, 4}), v({3, 0}), v({2, 2})}, PairingForm::identity(2));
  EXPECT_EQ(c.generators(), (std::vector<RatVec>{v({0, 1}), v({1, 0})}));
}

TEST(Cone, DivisorConeFacetsAreNefCurves) {
  const PolyCone peff = PolyCone::from_generators({E, D1, D2}, div_curve());
  EXPECT_EQ(peff.facets(), (std::vector<RatVec>{R, F2, F1}));
  EXPECT_EQ(dual_cone(peff).generators(), (std::vector<RatVec>{R, F2, F1}));
  EXPECT_FALSE(contains(peff, v({-1, 0, 2})));
}

TEST(Cone, NefDualIsEffectiveCurves) {
  const PolyCone nef = PolyCone::from_generators({H1, H2, X11}, div_curve());
  std::vector<RatVec> expected{J1, J2, C};
  sort_unique(expected);
  EXPECT_EQ(dual_cone(nef).generators(), expected);
}

TEST(Cone, FacetsMatchSubsetOracle) {
  const PairingForm p = div_curve();
  oracle::Matrix m{{0, 1, 1}, {1, 0, 1}, {0, 0, 1}};
  const std::vector<RatVec> gens{E, D1, D2, v({1, 1, 0})};
  EXPECT_EQ(PolyCone::from_generators(gens, p).facets(), oracle::facets_by_subsets(gens, m));
}

TEST(Cone, MinimalSupportedFace) {
  const PolyCone peff = PolyCone::from_generators({E, D1, D2}, div_curve());
  const SupportedFace at_e = minimal_supported_face(peff, E);
  EXPECT_EQ(at_e.codim, 2u);
  EXPECT_EQ(at_e.face.generators(), std::vector<RatVec>{E});
  EXPECT_EQ(at_e.tight_facets, (std::vector<RatVec>{F2, F1}));

  EXPECT_EQ(minimal_supported_face(peff, E + D1 + D2).codim, 0u);
  const SupportedFace at_zero = minimal_supported_face(peff, v({0, 0, 0}));
  EXPECT_EQ(at_zero.codim, 3u);
  EXPECT_TRUE(at_zero.face.generators().empty());
  EXPECT_THROW(minimal_supported_face(peff, v({-1, 0, 2})), PreconditionError);
}

TEST(Cone, LowerDimensionalCone) {
  const PolyCone c = PolyCone::from_generators({v({1, 0, 0}), v({0, 1, 0})}, PairingForm::identity(3));
  EXPECT_EQ(c.dimension(), 2u);
  EXPECT_FALSE(c.is_full_dimensional());
  EXPECT_EQ(c.equations(), std::vector<RatVec>{v({0, 0, 1})});
  EXPECT_TRUE(contains(c, v({2, 3, 0})));
  EXPECT_FALSE(contains(c, v({2, 3, 1})));
  EXPECT_EQ(minimal_supported_face(c, v({1, 1, 0})).codim, 1u);  // relative interior, codim in ambient
  EXPECT_EQ(minimal_supported_face(c, v({1, 0, 0})).codim, 2u);
  EXPECT_THROW(dual_cone(c), InputError);
}

TEST(Cone, RejectsLinealityAndBadDimensions) {
  EXPECT_THROW(PolyCone::from_generators({v({1, 0}), v({-1, 0}), v({0, 1})}, PairingForm::identity(2)), InputError);
  EXPECT_THROW(PolyCone::from_generators({v({1, 0, 0})}, PairingForm::identity(2)), InputError);
}

TEST(Cone, CompareGeneratorsNamesWitnesses) {
  const PolyCone peff = PolyCone::from_generators({E, D1, D2}, div_curve());
  const PolyCone dual = dual_cone(peff);
  EXPECT_TRUE(compare_generators(dual, std::vector<RatVec>{F1, F2, R}).equal);

  // Claim P1 = 2 F1 (same ray) plus an interior ray and drop R.
  const auto cmp = compare_generators(dual, std::vector<RatVec>{v({2, 0, 0}), F2, v({1, 1, 1})});
  EXPECT_FALSE(cmp.equal);
  ASSERT_EQ(cmp.missing.size(), 1u);
  EXPECT_EQ(cmp.missing[0].ray, v({1, 1, 1}));
  ASSERT_EQ(cmp.extra.size(), 1u);
  EXPECT_EQ(cmp.extra[0].ray, R);
  EXPECT_LT(dual.evaluate(cmp.extra[0].ray, cmp.extra[0].witness), 0);

  const auto bad = dual_violations(peff, std::vector<RatVec>{F1, C});
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_EQ(bad[0].ray, C);
  EXPECT_LT(peff.evaluate(bad[0].witness, C), 0);
}
