#include <gtest/gtest.h>

#include "manin/delpezzo.hpp"
#include "manin/errors.hpp"

using namespace manin;

namespace {
RatVec v(std::initializer_list<long> xs) { return RatVec::from_ints(xs); }
}  // namespace

TEST(DelPezzo, LatticeData) {
  const DPLattice l(6);
  EXPECT_EQ(l.rank(), 7u);
  EXPECT_EQ(l.degree(), 3);
  EXPECT_EQ(l.intersect(l.canonical(), l.canonical()), Rational(3));
  EXPECT_EQ(l.basis_labels().front(), "h");
  EXPECT_EQ(l.basis_labels().back(), "e6");
  EXPECT_THROW(DPLattice(9), InputError);
  EXPECT_THROW(DPLattice(-1), InputError);
}

TEST(DelPezzo, Classify) {
  const DPLattice l(3);
  EXPECT_EQ(classify(l, v({0, 1, 0, 0})).kind, CurveKind::minus_one);
  EXPECT_EQ(classify(l, v({1, -1, -1, 0})).kind, CurveKind::minus_one);
  EXPECT_EQ(classify(l, v({0, 1, -1, 0})).kind, CurveKind::minus_two);
  EXPECT_EQ(classify(l, v({1, -1, -1, -1})).kind, CurveKind::minus_two);
  EXPECT_EQ(classify(l, v({1, 0, 0, 0})).kind, CurveKind::other);
  EXPECT_THROW(classify(l, RatVec{Rational(1, 2), 0, 0, 0}), InputError);
  EXPECT_THROW(classify(l, v({1, 0})), InputError);
}

TEST(DelPezzo, MinusOneCounts) {
  const std::size_t expected[] = {0, 1, 3, 6, 10, 16, 27, 56, 240};
  for (int n = 0; n <= 8; ++n) {
    const auto found = enumerate_minus_one(DPLattice(n));
    EXPECT_EQ(found.size(), expected[n]) << "n = " << n;
    EXPECT_TRUE(std::is_sorted(found.begin(), found.end(), [](auto& a, auto& b) { return a.cls < b.cls; }));
  }
  EXPECT_EQ(enumerate_minus_one(DPLattice(1)).front().cls, v({0, 1}));
}

TEST(DelPezzo, RootCounts) {
  const std::size_t expected[] = {0, 0, 2, 8, 20, 40, 72, 126, 240};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(enumerate_minus_two(DPLattice(n)).size(), expected[n]) << "n = " << n;
  const auto two = enumerate_minus_two(DPLattice(2));
  EXPECT_EQ(two[0].cls, v({0, -1, 1}));
  EXPECT_EQ(two[1].cls, v({0, 1, -1}));
}

TEST(DelPezzo, BoundTouchingSolutionThrows) {
  // Every (-1)-class on the cubic surface has |h-coefficient| <= 2.
  EXPECT_EQ(enumerate_minus_one(DPLattice(6), 3).size(), 27u);
  EXPECT_THROW(enumerate_minus_one(DPLattice(6), 2), BoundExceeded);
  EXPECT_THROW(enumerate_minus_one(DPLattice(6), -1), InputError);
  EXPECT_GE(default_enumeration_bound(8, -1, -1), 7);
}

TEST(DelPezzo, ReflectionsAreIsometriesFixingK) {
  for (int n : {3, 6, 8}) {
    const DPLattice l(n);
    for (const auto& m : simple_reflections(l)) {
      EXPECT_EQ(m * l.canonical(), l.canonical());
      EXPECT_EQ(m * m, IntMatrix::identity(l.rank()));
      const RatVec x = RatVec::unit(l.rank(), 0), y = RatVec::unit(l.rank(), 1);
      EXPECT_EQ(l.intersect(m * x, m * y), l.intersect(x, y));
    }
  }
  EXPECT_THROW(reflection(DPLattice(3), v({0, 1, 0, 0})), InputError);
}

TEST(DelPezzo, BlowDown) {
  EXPECT_EQ(blow_down(DPLattice(1), classify(DPLattice(1), v({0, 1}))).degree(), 9);
  const DPLattice l6(6);
  const CurveClass line = classify(l6, v({1, -1, -1, 0, 0, 0, 0}));
  const DPLattice down = blow_down(l6, line);
  EXPECT_EQ(down.n(), 5);
  EXPECT_EQ(down.degree(), 4);
  EXPECT_EQ(exceptional_basis_change(l6, line) * line.cls, RatVec::unit(7, 6));
  EXPECT_EQ(blow_down(DPLattice(2), classify(DPLattice(2), v({0, 0, 1}))).degree(), 8);
  EXPECT_THROW(blow_down(l6, classify(l6, v({0, 1, -1, 0, 0, 0, 0}))), InputError);
}

TEST(DelPezzo, EveryLineBlowsDownToE6OnTheCubic) {
  const DPLattice l(6);
  for (const auto& c : enumerate_minus_one(l)) {
    const IntMatrix m = exceptional_basis_change(l, c);
    EXPECT_EQ(m * c.cls, RatVec::unit(7, 6)) << c.cls.to_string();
    EXPECT_EQ(m * l.canonical(), l.canonical());
  }
}

TEST(DelPezzo, CrepantRankDrop) {
  const DPLattice l(3);
  const auto r = [&](std::initializer_list<long> xs) { return classify(l, v(xs)); };
  EXPECT_EQ(crepant_rank_drop(l, {}), 0u);
  const std::vector<CurveClass> two{r({0, 1, -1, 0}), r({0, 0, 1, -1})};
  EXPECT_EQ(crepant_rank_drop(l, two), 2u);
  const std::vector<CurveClass> three{r({0, 1, -1, 0}), r({0, 0, 1, -1}), r({0, 1, 0, -1})};
  EXPECT_EQ(crepant_rank_drop(l, three), 2u);
  const std::vector<CurveClass> bad{r({0, 1, 0, 0})};
  EXPECT_THROW(crepant_rank_drop(l, bad), InputError);
}
