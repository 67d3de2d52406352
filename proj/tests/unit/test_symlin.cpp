#include <gtest/gtest.h>

#include "veronormal/errors.hpp"
#include "veronormal/polyring.hpp"
#include "veronormal/symlin.hpp"

using namespace veronormal;
using namespace veronormal::symlin;

TEST(SymPower, Identity) {
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(sym_power(QMatrix::identity(3), i), QMatrix::identity(monomial_count(3, i)));
}

TEST(SymPower, Diagonal) {
  const QMatrix d = QMatrix::from_rows({{2, 0}, {0, 5}});
  EXPECT_EQ(sym_power(d, 2), QMatrix::from_rows({{4, 0, 0}, {0, 10, 0}, {0, 0, 25}}));
}

TEST(SymPower, ExplicitTwoByTwo) {
  // f(x) = a x + c y, f(y) = b x + d y; basis x^2, xy, y^2.
  const QMatrix f = QMatrix::from_rows({{1, 2}, {3, 4}});
  const QMatrix expect = QMatrix::from_rows({{1, 2, 4}, {6, 10, 16}, {9, 12, 16}});
  // columns: x^2 -> (x + 3y)^2, xy -> (x + 3y)(2x + 4y), y^2 -> (2x + 4y)^2
  EXPECT_EQ(sym_power(f, 2), expect);
}

TEST(SymPower, Functorial) {
  const QMatrix a = QMatrix::from_rows({{1, 2, 0}, {3, -1, 1}});
  const QMatrix b = QMatrix::from_rows({{2, 1}, {0, 1}, {1, 1}, {4, -2}});
  EXPECT_EQ(sym_power(b * a, 3), sym_power(b, 3) * sym_power(a, 3));
}

TEST(Quotient, DegreeOneIsPlainDual) {
  const LinearSES ses = random_ses(2, 4, 7);
  EXPECT_EQ(quotient_map(ses, 1), ses.phi.transpose());
}

TEST(Quotient, PairingFormula) {
  // <q(l1 l2), [a] (x) b> = 1/2 (l1(a) l2(phi b) + l2(a) l1(phi b)) for l1 = e0*, l2 = e1*.
  const LinearSES ses = random_ses(1, 3, 11);
  const QMatrix q = quotient_map(ses, 2);
  // Sym^2 N* basis index of e0* e1* is 1; Sym^1 N* (x) M* row (alpha, k) = alpha.
  const Rat phi0 = ses.phi(0, 0);
  const Rat phi1 = ses.phi(1, 0);
  // a = e0: 1/2 (1 * phi1 + 0) ; a = e1: 1/2 (0 + phi0); a = e2: 0.
  EXPECT_EQ(q(0, 1), phi1 / 2);
  EXPECT_EQ(q(1, 1), phi0 / 2);
  EXPECT_EQ(q(2, 1), 0);
}

TEST(Quotient, ZeroPhi) {
  LinearSES ses{QMatrix(3, 1), QMatrix::identity(3)};
  EXPECT_TRUE(quotient_map(ses, 2).is_zero());
}

TEST(Commute, DegreeOne) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) EXPECT_TRUE(check_commute(random_ses(2, 4, seed), 1).holds());
}

TEST(Commute, Examples) {
  EXPECT_TRUE(check_commute(random_ses(1, 3, 1), 2).holds());
  EXPECT_TRUE(check_commute(random_ses(2, 4, 2), 3).holds());
}

TEST(Ses, ValidateRejectsNonExact) {
  LinearSES ses{QMatrix::from_rows({{1}, {0}}), QMatrix::from_rows({{1, 0}})};
  EXPECT_THROW(validate(ses), MathError);
  EXPECT_NO_THROW(validate(random_ses(2, 5, 3)));
}
