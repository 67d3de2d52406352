#include <gtest/gtest.h>

#include "veronormal/errors.hpp"
#include "veronormal/exactalg.hpp"

using namespace veronormal;

TEST(Rref, IdentityIsFixed) {
  const auto r = rref(QMatrix::identity(2));
  EXPECT_EQ(r.matrix, QMatrix::identity(2));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, RankOneRow) {
  const auto r = rref(QMatrix::from_rows({{1, 2}, {2, 4}}));
  EXPECT_EQ(r.matrix, QMatrix::from_rows({{1, 2}, {0, 0}}));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
}

TEST(Rref, Permutation) {
  const auto r = rref(QMatrix::from_rows({{0, 1}, {1, 0}}));
  EXPECT_EQ(r.matrix, QMatrix::identity(2));
  EXPECT_EQ(r.rank(), 2u);
}

TEST(Rref, FractionsStayExact) {
  QMatrix m(2, 2);
  m(0, 0) = make_rat(1, 3);
  m(0, 1) = make_rat(1, 7);
  m(1, 0) = make_rat(2, 3);
  m(1, 1) = make_rat(2, 7);
  EXPECT_EQ(rank(m), 1u);
  EXPECT_EQ(determinant(m), 0);
}

TEST(Kernel, RankOne) {
  const QMatrix m = QMatrix::from_rows({{1, 2}, {2, 4}});
  const auto k = kernel_basis(m);
  ASSERT_EQ(k.size(), 1u);
  // proportional to (-2, 1)
  EXPECT_EQ(k[0](0, 0) * 1, k[0](1, 0) * -2);
  EXPECT_TRUE((m * k[0]).is_zero());
}

TEST(Kernel, IdentityHasNone) { EXPECT_TRUE(kernel_basis(QMatrix::identity(4)).empty()); }

TEST(Kernel, ZeroMatrixFull) {
  const auto k = kernel_basis(QMatrix(2, 3));
  EXPECT_EQ(k.size(), 3u);
  EXPECT_EQ(rank(hstack(k, 3)), 3u);
}

TEST(Kernel, VectorsAnnihilated) {
  const QMatrix m = QMatrix::from_rows({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, -1, 5}});
  const auto k = kernel_basis(m);
  EXPECT_EQ(k.size(), 4u - rank(m));
  for (const auto& v : k) EXPECT_TRUE((m * v).is_zero());
}

TEST(Determinant, Small) {
  EXPECT_EQ(determinant(QMatrix::from_rows({{2, 1}, {7, 4}})), 1);
  EXPECT_EQ(determinant(QMatrix::from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})), -1);
}

TEST(Rat, ParseAndPrint) {
  EXPECT_EQ(parse_rat("-6/4"), make_rat(-3, 2));
  EXPECT_EQ(to_string(make_rat(-3, 2)), "-3/2");
  EXPECT_EQ(to_string(make_rat(4, 2)), "2");
  EXPECT_THROW(parse_rat("1/0"), FormatError);
  EXPECT_THROW(parse_rat("x"), FormatError);
}

TEST(QMatrixOps, TransposeAndProduct) {
  const QMatrix a = QMatrix::from_rows({{1, 2, 3}, {4, 5, 6}});
  EXPECT_EQ(a.transpose().transpose(), a);
  EXPECT_EQ(a * QMatrix::identity(3), a);
  EXPECT_EQ((a * a.transpose()), QMatrix::from_rows({{14, 32}, {32, 77}}));
}
