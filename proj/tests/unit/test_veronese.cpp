#include <gtest/gtest.h>

#include "veronormal/errors.hpp"
#include "veronormal/veronese.hpp"

using namespace veronormal;

namespace {
HomPoly P(const std::string& s) { return parse_poly(s, 2); }
}  // namespace

TEST(Theta, ConicMatrix) {
  const GradedMap th = theta_matrix(VeroneseContext(1, 2));
  ASSERT_EQ(th.rows(), 3u);
  ASSERT_EQ(th.cols(), 2u);
  EXPECT_EQ(th.entry(0, 0), P("2*Z0"));
  EXPECT_TRUE(th.entry(0, 1).is_zero());
  EXPECT_EQ(th.entry(1, 0), P("Z1"));
  EXPECT_EQ(th.entry(1, 1), P("Z0"));
  EXPECT_TRUE(th.entry(2, 0).is_zero());
  EXPECT_EQ(th.entry(2, 1), P("2*Z1"));
}

TEST(Theta, TwistedCubicFirstColumn) {
  const GradedMap th = theta_matrix(VeroneseContext(1, 3));
  ASSERT_EQ(th.rows(), 4u);
  EXPECT_EQ(th.entry(0, 0), P("3*Z0^2"));
  EXPECT_EQ(th.entry(1, 0), P("2*Z0*Z1"));
  EXPECT_EQ(th.entry(2, 0), P("Z1^2"));
  EXPECT_TRUE(th.entry(3, 0).is_zero());
}

TEST(Theta, Shape) {
  for (int n = 1; n <= 4; ++n)
    for (int d = 2; d <= 4; ++d) {
      const GradedMap th = theta_matrix(VeroneseContext(n, d));
      EXPECT_EQ(th.cols(), static_cast<std::size_t>(n + 1));
      EXPECT_EQ(BigInt(static_cast<long>(th.rows())), binomial(n + d, d));
    }
}

TEST(Veronese, DegreeOneRejected) {
  try {
    VeroneseContext ctx(3, 1);
    FAIL();
  } catch (const MathError& e) {
    EXPECT_STREQ(e.what(), "Veronese with d=1 is an isomorphism; normal bundle is zero");
  }
}

TEST(Xi, FirstStepOnLine) {
  const GradedMap xi = xi_matrix(VeroneseContext(1, 2), 1);
  EXPECT_EQ(xi.source_twists(), (std::vector<int>{1, 1}));
  EXPECT_EQ(xi.target_twists(), (std::vector<int>{2}));
  EXPECT_EQ(xi.entry(0, 0), P("Z0"));
  EXPECT_EQ(xi.entry(0, 1), P("Z1"));
}

TEST(Delta, FullContractionShape) {
  const VeroneseContext ctx(2, 3);
  const GradedMap dd = delta_matrix(ctx, 3);
  EXPECT_EQ(dd.source_twists(), std::vector<int>(10, 0));
  EXPECT_EQ(dd.target_twists(), (std::vector<int>{3}));
}

TEST(Delta, IteratesCompose) {
  for (int n = 1; n <= 3; ++n)
    for (int d = 2; d <= 4; ++d) {
      const VeroneseContext ctx(n, d);
      for (int i = 1; i < d; ++i)
        EXPECT_EQ(delta_matrix(ctx, i + 1), compose(xi_matrix(ctx, d - i), delta_matrix(ctx, i)))
            << "n=" << n << " d=" << d << " i=" << i;
    }
}

TEST(DualIdentity, SmallCases) {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}}) {
    const auto rep = verify_dual_identity(VeroneseContext(n, d));
    EXPECT_TRUE(rep.holds) << rep.diagnostic;
  }
}

TEST(DualIdentity, FactorIsFactorial) {
  // Observed: a single scalar (d-1)! relates the two matrices.
  Rat fact = 1;
  for (int d = 2; d <= 5; ++d) {
    const auto rep = verify_dual_identity(VeroneseContext(2, d));
    ASSERT_TRUE(rep.uniform);
    EXPECT_EQ(rep.uniform_factor, fact);
    fact *= d;
  }
}

TEST(Euler, ThetaOnEulerVector) {
  // Theta applied to the Euler vector is d times the Veronese section.
  for (int n = 1; n <= 3; ++n)
    for (int d = 2; d <= 4; ++d) {
      const VeroneseContext ctx(n, d);
      const GradedMap lhs = compose(theta_matrix(ctx), euler_section(ctx));
      const GradedMap v = veronese_section(ctx);
      ASSERT_EQ(lhs.rows(), v.rows());
      for (std::size_t r = 0; r < v.rows(); ++r) EXPECT_EQ(lhs.entry(r, 0), Rat(d) * v.entry(r, 0));
    }
}

TEST(KBundle, Examples) {
  const auto a = k_bundle_stats(VeroneseContext(1, 2), 1);
  EXPECT_EQ(a.rank, 1);
  EXPECT_EQ(a.degree, -2);
  EXPECT_EQ(a.slope, -2);
  const auto b = k_bundle_stats(VeroneseContext(2, 2), 1);
  EXPECT_EQ(b.rank, 3);
  EXPECT_EQ(b.degree, -3);
  EXPECT_EQ(b.slope, -1);
  EXPECT_EQ(k_bundle_stats(VeroneseContext(3, 4), 5).slope, 0);
}

TEST(KBundle, SlopeChain) {
  for (int n = 1; n <= 8; ++n)
    for (int d = 2; d <= 8; ++d) {
      const VeroneseContext ctx(n, d);
      for (int i = 1; i <= d; ++i) EXPECT_LT(k_bundle_stats(ctx, i).slope, k_bundle_stats(ctx, i + 1).slope);
    }
}

TEST(Xi, SectionCokernelOnLine) {
  // On P^1, K^1_d = O(-d), so for m >= -1 the section map misses exactly
  // h^1(O(m - d)) = max(0, d - m - 1) dimensions.
  for (int d = 2; d <= 5; ++d) {
    const GradedMap f = delta_matrix(VeroneseContext(1, d), 1);
    for (int m = -1; m <= 3 * d; ++m) {
      const QMatrix s = stratum(f, m);
      EXPECT_EQ(static_cast<int>(s.rows() - rank(s)), std::max(0, d - m - 1)) << "d=" << d << " m=" << m;
    }
  }
}

TEST(Xi, SurjectiveOnSectionsForLargeTwist) {
  for (int n = 1; n <= 3; ++n)
    for (int d = 2; d <= 4; ++d) {
      const GradedMap f = delta_matrix(VeroneseContext(n, d), 1);
      for (int m = d - 1; m <= d + 2; ++m) {
        const QMatrix s = stratum(f, m);
        EXPECT_EQ(rank(s), s.rows()) << "n=" << n << " d=" << d << " m=" << m;
      }
    }
}
