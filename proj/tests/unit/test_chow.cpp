#include <gtest/gtest.h>

#include "veronormal/chow.hpp"

using namespace veronormal;

TEST(Chern, QuadricSurface) {
  const ChowClass c = chern_normal(VeroneseContext(2, 2));
  EXPECT_EQ(c, ChowClass(2, {Rat(1), Rat(9), Rat(30)}));
}

TEST(Chern, Conic) { EXPECT_EQ(chern_normal(VeroneseContext(1, 2)), ChowClass(1, {Rat(1), Rat(4)})); }

TEST(Chern, FirstClassClosedForm) {
  for (int n = 1; n <= 6; ++n)
    for (int d = 2; d <= 6; ++d) {
      const VeroneseContext ctx(n, d);
      EXPECT_EQ(chern_normal(ctx)[1], Rat(ctx.sym_dim()) * d - (n + 1));
    }
}

TEST(Chern, RingLaws) {
  for (int n = 1; n <= 5; ++n)
    for (int d = 2; d <= 5; ++d) {
      const VeroneseContext ctx(n, d);
      const ChowClass check = ChowClass::linear(n, 1).pow(n + 1) * chern_normal(ctx) *
                              ChowClass::linear(n, d).pow(-static_cast<long>(ctx.sym_dim()));
      EXPECT_EQ(check, ChowClass::one(n));
    }
  const ChowClass a(3, {Rat(1), Rat(2), Rat(-1), Rat(5)});
  EXPECT_EQ(a * a.inverse(), ChowClass::one(3));
}

TEST(NormalStats, Examples) {
  const auto a = normal_stats(VeroneseContext(2, 2));
  EXPECT_EQ(a.rank, 3);
  EXPECT_EQ(a.degree, 9);
  EXPECT_EQ(a.slope, 3);
  const auto b = normal_stats(VeroneseContext(3, 2));
  EXPECT_EQ(b.rank, 6);
  EXPECT_EQ(b.degree, 16);
  EXPECT_EQ(b.slope, make_rat(8, 3));
  for (int d = 2; d <= 7; ++d) {
    const auto c = normal_stats(VeroneseContext(1, d));
    EXPECT_EQ(c.rank, d - 1);
    EXPECT_EQ(c.slope, d + 2);
  }
}

TEST(Hilbert, ConicNormal) {
  const HilbertPoly p = hilbert_poly(normal_presentation(VeroneseContext(1, 2)));
  EXPECT_EQ(p.power_coeffs(), (std::vector<Rat>{Rat(5), Rat(1)}));
}

TEST(Hilbert, FreeSheaf) {
  const HilbertPoly p = hilbert_poly_line_bundle(3, 0);
  for (int m = 0; m <= 6; ++m) EXPECT_EQ(p(m), Rat(binomial(3 + m, 3)));
}

TEST(Hilbert, RecoversRankAndDegree) {
  for (int n = 1; n <= 4; ++n)
    for (int d = 2; d <= 4; ++d) {
      const VeroneseContext ctx(n, d);
      const BundleStats a = stats_from_hilbert(hilbert_poly(normal_presentation(ctx)), n);
      const BundleStats b = normal_stats(ctx);
      EXPECT_EQ(a.rank, b.rank);
      EXPECT_EQ(a.degree, b.degree);
    }
}

TEST(GrauertMulich, Examples) {
  const auto a = gm_check(SplittingType({4, 3, 2}), VeroneseContext(2, 2));
  EXPECT_TRUE(a.all_ok());
  const auto b = gm_check(SplittingType({5, 5}), VeroneseContext(1, 3));
  EXPECT_TRUE(b.sum_ok && b.rank_ok && b.spread_ok);
  const auto c = gm_check(SplittingType({6, 2}), VeroneseContext(2, 2));
  EXPECT_FALSE(c.spread_ok);
}
