#include <gtest/gtest.h>

#include "veronormal/errors.hpp"
#include "veronormal/polyring.hpp"

using namespace veronormal;

namespace {
HomPoly P(const std::string& s, int vars = 3) { return parse_poly(s, vars); }
}  // namespace

TEST(Multiply, Monomials) { EXPECT_EQ(P("Z0") * P("Z1"), P("Z0*Z1")); }

TEST(Multiply, DifferenceOfSquares) {
  EXPECT_EQ(P("Z0 + Z1", 2) * P("Z0 - Z1", 2), P("Z0^2 - Z1^2", 2));
}

TEST(Multiply, ByZero) {
  const HomPoly zero(3, 2);
  EXPECT_TRUE((zero * P("Z0 + 3*Z2")).is_zero());
}

TEST(Differentiate, Examples) {
  EXPECT_EQ(differentiate(P("Z0^2", 2), 0), P("2*Z0", 2));
  EXPECT_EQ(differentiate(P("Z0*Z1", 2), 1), P("Z0", 2));
  EXPECT_TRUE(differentiate(P("Z1^3", 2), 0).is_zero());
}

TEST(Substitute, Examples) {
  const HomPoly s = HomPoly::variable(2, 0);
  const HomPoly t = HomPoly::variable(2, 1);
  EXPECT_EQ(substitute(P("Z0*Z2"), {s * s, s * t, t * t}), parse_poly("s^2*t^2", 2));
  EXPECT_EQ(substitute(P("Z1"), {s, t, HomPoly(2, 1)}), t);
  EXPECT_EQ(substitute(P("Z0^2", 4), {s * s * s, s * s * t, s * t * t, t * t * t}), parse_poly("s^6", 2));
}

TEST(Substitute, RejectsMixedDegrees) {
  const HomPoly s = HomPoly::variable(2, 0);
  EXPECT_THROW(substitute(P("Z0", 2), {s, s * s}), MathError);
}

TEST(Monomials, Enumeration) {
  const auto m21 = monomials(2, 1);
  ASSERT_EQ(m21.size(), 2u);
  EXPECT_EQ(m21[0], (Monomial{1, 0}));
  EXPECT_EQ(m21[1], (Monomial{0, 1}));
  EXPECT_EQ(monomials(3, 2).size(), 6u);
  EXPECT_EQ(monomials(2, 0), (std::vector<Monomial>{{0, 0}}));
}

TEST(Monomials, IndexIsPosition) {
  for (int k = 1; k <= 4; ++k)
    for (int m = 0; m <= 4; ++m) {
      const auto list = monomials(k, m);
      EXPECT_EQ(list.size(), monomial_count(k, m));
      for (std::size_t i = 0; i < list.size(); ++i) EXPECT_EQ(monomial_index(list[i]), i);
    }
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_EQ(binomial(4, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
}

TEST(Format, RoundTrip) {
  const HomPoly p = P("3*Z0^2 - 1/2*Z1*Z2 + Z2^2");
  EXPECT_EQ(parse_poly(to_string(p), 3), p);
  EXPECT_EQ(to_string(HomPoly(3, 2)), "0");
  EXPECT_THROW(parse_poly("Z0 + Z1^2", 2), FormatError);
  EXPECT_THROW(parse_poly("Z7", 2), FormatError);
}

TEST(BinaryForms, CommonZeros) {
  const HomPoly s = HomPoly::variable(2, 0);
  const HomPoly t = HomPoly::variable(2, 1);
  EXPECT_EQ(common_zero_degree({s * s, s * t}), 1);       // s = 0
  EXPECT_EQ(common_zero_degree({s * s, t * t}), 0);
  EXPECT_EQ(common_zero_degree({s * t - t * t, s * s - s * t}), 1);  // s = t
}
