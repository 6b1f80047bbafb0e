#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"

using namespace manin;

namespace {

oracle::Matrix matrix_of(const PairingForm& p) {
  oracle::Matrix m(p.left_dim(), std::vector<Rational>(p.right_dim()));
  for (std::size_t i = 0; i < p.left_dim(); ++i)
    for (std::size_t j = 0; j < p.right_dim(); ++j) m[i][j] = p.matrix()(i, j);
  return m;
}

}  // namespace

TEST(ConeProperties, DualIsAnInvolution) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t dim = 2 + trial % 5;
    const auto gens = gen::pointed_generators(rng, dim, dim + static_cast<std::size_t>(trial % 7));
    const PolyCone c = PolyCone::from_generators(gens, gen::random_pairing(rng, dim));
    const PolyCone dd = dual_cone(dual_cone(c));
    EXPECT_EQ(dd.generators(), c.generators()) << "trial " << trial;
    EXPECT_EQ(dd.pairing(), c.pairing());
  }
}

TEST(ConeProperties, FacetsAgreeWithSubsetOracle) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t dim = 1 + trial % 5;
    const auto gens = gen::pointed_generators(rng, dim, dim + static_cast<std::size_t>(trial % 5));
    const PairingForm p = gen::random_pairing(rng, dim);
    EXPECT_EQ(PolyCone::from_generators(gens, p).facets(), oracle::facets_by_subsets(gens, matrix_of(p)))
        << "trial " << trial;
  }
}

TEST(ConeProperties, MembershipConsistency) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 2 + trial % 4;
    const auto gens = gen::pointed_generators(rng, dim, dim + 3);
    const PolyCone c = PolyCone::from_generators(gens, gen::random_pairing(rng, dim));
    const PolyCone d = dual_cone(c);
    for (const auto& g : gens) EXPECT_TRUE(contains(c, g));
    for (const auto& f : c.facets()) EXPECT_TRUE(contains(d, f));
    for (const auto& g : c.generators()) EXPECT_TRUE(c.is_extreme_ray(g));
  }
}

TEST(ConeProperties, FaceCodimZeroExactlyInInterior) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 2 + trial % 4;
    const auto gens = gen::pointed_generators(rng, dim, dim + 2);
    const PolyCone c = PolyCone::from_generators(gens, PairingForm::identity(dim));
    // Random nonnegative combinations, often on the boundary.
    std::uniform_int_distribution<int> w(0, 2);
    RatVec x(dim);
    for (const auto& g : c.generators()) x += Rational(w(rng)) * g;
    const SupportedFace f = minimal_supported_face(c, x);
    EXPECT_EQ(f.codim == 0, c.contains_in_interior(x));
    EXPECT_TRUE(contains(f.face, x));
    // The face is a face: its rays are tight on every tight facet.
    for (const auto& r : f.face.generators())
      for (const auto& t : f.tight_facets) EXPECT_EQ(c.evaluate(r, t), 0);
  }
}

TEST(ConeProperties, DeterministicCanonicalOutput) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = 3 + trial % 3;
    auto gens = gen::pointed_generators(rng, dim, dim + 4);
    const PolyCone a = PolyCone::from_generators(gens, PairingForm::identity(dim));
    std::shuffle(gens.begin(), gens.end(), rng);
    for (auto& g : gens) g *= Rational(std::uniform_int_distribution<int>(1, 5)(rng)) / 2;
    const PolyCone b = PolyCone::from_generators(gens, PairingForm::identity(dim));
    EXPECT_EQ(a, b);
    EXPECT_TRUE(std::is_sorted(a.generators().begin(), a.generators().end()));
    EXPECT_TRUE(std::is_sorted(a.facets().begin(), a.facets().end()));
  }
}
