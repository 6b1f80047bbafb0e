#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "generators.hpp"
#include "manin/int_matrix.hpp"
#include "oracles.hpp"

using namespace manin;

namespace {

oracle::Matrix matrix_of(const PairingForm& p) {
  oracle::Matrix m(p.left_dim(), std::vector<Rational>(p.right_dim()));
  for (std::size_t i = 0; i < p.left_dim(); ++i)
    for (std::size_t j = 0; j < p.right_dim(); ++j) m[i][j] = p.matrix()(i, j);
  return m;
}

PolarizedSpace space_of(const gen::RandomSpace& s) {
  const std::vector<std::string> labels(s.gens.front().dim());
  return PolarizedSpace("random", labels, PolyCone::from_generators(s.gens, s.pairing), s.K, s.L);
}

}  // namespace

TEST(InvariantProperties, AgreesWithBisectionOracle) {
  std::mt19937 rng(314159);
  for (int trial = 0; trial < 500; ++trial) {
    const gen::RandomSpace s = gen::random_space(rng);
    const PolarizedSpace space = space_of(s);
    const Rational a = a_invariant(space);
    EXPECT_EQ(a, oracle::a_by_bisection(s.gens, matrix_of(s.pairing), s.K, s.L)) << "trial " << trial;
    const RatVec adj = adjoint_class(space);
    const auto facets = space.pseff().facets();
    EXPECT_TRUE(oracle::member(facets, matrix_of(s.pairing), adj));
    EXPECT_FALSE(oracle::interior(facets, matrix_of(s.pairing), adj));
    EXPECT_GE(b_invariant(space), 1u);
    EXPECT_LE(b_invariant(space), space.rank());
  }
}

TEST(InvariantProperties, ScalingCovariance) {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 100; ++trial) {
    const gen::RandomSpace s = gen::random_space(rng);
    const PolarizedSpace space = space_of(s);
    const Rational c = Rational(std::uniform_int_distribution<int>(1, 7)(rng)) / std::uniform_int_distribution<int>(1, 5)(rng);
    const PolarizedSpace scaled = space.with_polarization(c * s.L);
    EXPECT_EQ(a_invariant(scaled), a_invariant(space) / c);
    EXPECT_EQ(b_invariant(scaled), b_invariant(space));
    EXPECT_EQ(adjoint_class(scaled), adjoint_class(space));
  }
}

TEST(InvariantProperties, LexOrderIsTotal) {
  std::mt19937 rng(99);
  std::vector<ABResult> rs;
  for (int i = 0; i < 40; ++i) {
    ABResult r;
    r.a = Rational(std::uniform_int_distribution<int>(0, 4)(rng)) / std::uniform_int_distribution<int>(1, 3)(rng);
    r.b = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    rs.push_back(r);
  }
  for (const auto& x : rs) {
    EXPECT_EQ(compare_lex(x, x), std::strong_ordering::equal);
    for (const auto& y : rs) {
      const auto xy = compare_lex(x, y);
      EXPECT_EQ(xy, 0 <=> compare_lex(y, x));
      EXPECT_EQ(xy == std::strong_ordering::equal, x.a == y.a && x.b == y.b);
      for (const auto& z : rs)
        if (xy < 0 && compare_lex(y, z) < 0) EXPECT_TRUE(compare_lex(x, z) < 0);
    }
  }
}

TEST(InvariantProperties, VerdictMatchesLexOrder) {
  const ABResult base{Rational(1), 2, {}, {}};
  for (int a = 0; a <= 3; ++a)
    for (std::size_t b = 1; b <= 3; ++b) {
      const ABResult other{Rational(a) / 2, b, {}, {}};
      const auto ord = compare_lex(other, base);
      const BalanceVerdict v = balanced_verdict(base, other, true);
      if (ord < 0) EXPECT_EQ(v, BalanceVerdict::balanced);
      else if (ord == 0) EXPECT_EQ(v, BalanceVerdict::weakly_balanced_only);
      else EXPECT_EQ(v, BalanceVerdict::not_weakly_balanced);
    }
}

// Octant spaces with a random coordinate permutation group; K and L are
// constant on orbits, and the rigid components are the coordinate rays in
// the support of the adjoint class.
TEST(InvariantProperties, EquivariantBAtMostB) {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    IntMatrix g(n);
    for (std::size_t i = 0; i < n; ++i) g(perm[i], i) = 1;
    // Orbit labels under perm.
    std::vector<std::size_t> orbit(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (orbit[i] != n) continue;
      for (std::size_t j = i; orbit[j] == n; j = perm[j]) orbit[j] = i;
    }
    std::vector<int> kw(n), lw(n);
    for (std::size_t i = 0; i < n; ++i)
      if (orbit[i] == i) {
        kw[i] = -std::uniform_int_distribution<int>(0, 3)(rng);
        lw[i] = std::uniform_int_distribution<int>(1, 3)(rng);
      }
    RatVec K(n), L(n);
    for (std::size_t i = 0; i < n; ++i) {
      K[i] = kw[orbit[i]];
      L[i] = lw[orbit[i]];
    }
    std::vector<RatVec> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(RatVec::unit(n, i));
    const PolyCone octant = PolyCone::from_generators(gens, PairingForm::identity(n));
    const PolarizedSpace probe("oct", std::vector<std::string>(n), octant, K, L);
    const RatVec adj = adjoint_class(probe);
    GroupAction action;
    action.generators = {g};
    for (std::size_t i = 0; i < n; ++i)
      if (adj[i] != 0) action.rigid_components.push_back(RatVec::unit(n, i));
    const PolarizedSpace space("oct", std::vector<std::string>(n), octant, K, L, std::nullopt, true);
    const std::size_t b = b_invariant(space);
    const std::size_t be = b_equivariant(space, action);
    EXPECT_GE(be, 1u);
    EXPECT_LE(be, b) << "trial " << trial;
    std::size_t zero_orbits = 0;
    for (std::size_t i = 0; i < n; ++i) zero_orbits += orbit[i] == i && adj[i] == 0;
    EXPECT_EQ(be, zero_orbits);
  }
}
