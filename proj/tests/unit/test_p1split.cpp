#include <gtest/gtest.h>

#include "veronormal/curves.hpp"
#include "veronormal/errors.hpp"
#include "veronormal/p1split.hpp"
#include "veronormal/restrict.hpp"
#include "veronormal/veronese.hpp"

using namespace veronormal;

namespace {
const HomPoly s = HomPoly::variable(2, 0);
const HomPoly t = HomPoly::variable(2, 1);
}  // namespace

TEST(Splitting, TwistedCubicNormal) {
  const GradedMap pres = pullback(normal_presentation(VeroneseContext(1, 3)), standard_line(1));
  EXPECT_EQ(splitting_type(pres), SplittingType({5, 5}));
}

TEST(Splitting, QuadricOnLine) {
  EXPECT_EQ(restrict_normal(VeroneseContext(2, 2), standard_line(2)), SplittingType({4, 3, 2}));
}

TEST(Splitting, FreeSheaf) {
  EXPECT_EQ(splitting_type(GradedMap(2, {}, {1, 1})), SplittingType({1, 1}));
}

TEST(Splitting, EulerSequence) {
  // O(-1) -> O^2 by (s, t) has cokernel O(1).
  GradedMap f(2, {-1}, {0, 0});
  f.set_entry(0, 0, s);
  f.set_entry(1, 0, t);
  EXPECT_EQ(splitting_type(f), SplittingType({1}));
}

TEST(Splitting, UnbalancedSum) {
  // (s^2, t^2) has cokernel O(2); (s^2, s t) vanishes at s = 0.
  GradedMap f(2, {-2}, {0, 0});
  f.set_entry(0, 0, s * s);
  f.set_entry(1, 0, t * t);
  EXPECT_EQ(splitting_type(f), SplittingType({2}));

  GradedMap g(2, {-2}, {0, 0});
  g.set_entry(0, 0, s * s);
  g.set_entry(1, 0, s * t);
  EXPECT_THROW(splitting_type(g), MathError);
}

TEST(Splitting, NotInjective) {
  GradedMap f(2, {-1}, {0});
  EXPECT_THROW(splitting_type(f), MathError);
}

TEST(Splitting, TorsionRejected) {
  GradedMap f(2, {0}, {1});
  f.set_entry(0, 0, s);
  EXPECT_FALSE(cokernel_locally_free(f));
  EXPECT_THROW(splitting_type(f), MathError);
}

TEST(Splitting, MixedDegreesBalanced) {
  // O(-3) -> O(0) + O(-1) by (s^3 + t^3, s t); rank 1, degree 0 - 1 + 3.
  GradedMap f(2, {-3}, {0, -1});
  f.set_entry(0, 0, s * s * s + t * t * t);
  f.set_entry(1, 0, s * t);
  EXPECT_EQ(splitting_type(f), SplittingType({2}));
}

TEST(H0, Profile) {
  EXPECT_EQ(h0_profile(SplittingType({4}), 0, 0), (std::vector<long>{5}));
  EXPECT_EQ(h0_profile(SplittingType({4, 3, 2}), -3, -3), (std::vector<long>{3}));
  EXPECT_EQ(h0_profile(SplittingType({6, 6, 6}), 0, 0), (std::vector<long>{21}));
}

TEST(H0, MatchesSections) {
  // Direct computation of h0 as dim coker of the section map.
  const GradedMap pres = pullback(normal_presentation(VeroneseContext(2, 2)), random_line(2, 3));
  const SplittingType st = splitting_type(pres);
  for (int m = 0; m <= 6; ++m) {
    const QMatrix sec = stratum(pres, m);
    const long coker = static_cast<long>(sec.rows() - rank(sec));
    EXPECT_EQ(h0_profile(st, m, m)[0], coker) << "m=" << m;
  }
}

TEST(SymSquare, Examples) {
  EXPECT_EQ(sym_square(SplittingType({1, 1, 2})), SplittingType({2, 2, 2, 3, 3, 4}));
  EXPECT_EQ(sym_square(SplittingType({3, 3})), SplittingType({6, 6, 6}));
  EXPECT_EQ(sym_square(SplittingType({0})), SplittingType({0}));
}

TEST(GenericRank, Normal) {
  const GradedMap pres = pullback(normal_presentation(VeroneseContext(3, 2)), random_line(3, 1));
  EXPECT_EQ(generic_rank(pres), 4u);
}

TEST(SymSquare, RankAndDegree) {
  const SplittingType st({5, 3, 3, 0, -2});
  const SplittingType sq = sym_square(st);
  EXPECT_EQ(sq.rank(), 15u);
  EXPECT_EQ(sq.degree(), 6 * st.degree());
}
