#include "veronormal/curves.hpp"

#include "veronormal/errors.hpp"
#include "veronormal/splitmix.hpp"

namespace veronormal {

namespace {

constexpr long kCoefMin = -9;
constexpr long kCoefMax = 9;

HomPoly linear_form(const Rat& a, const Rat& b) {
  HomPoly f(2, 1);
  f.add_term({1, 0}, a);
  f.add_term({0, 1}, b);
  return f;
}

}  // namespace

CurveParam standard_line(int n) {
  if (n < 1) throw MathError("dimension n must be at least 1");
  CurveParam c;
  c.degree = 1;
  c.forms.push_back(HomPoly::variable(2, 0));
  c.forms.push_back(HomPoly::variable(2, 1));
  for (int i = 2; i <= n; ++i) c.forms.emplace_back(2, 1);
  return c;
}

QMatrix line_coefficients(const CurveParam& line) {
  if (line.degree != 1) throw MathError("line_coefficients: curve is not a line");
  QMatrix m(2, line.forms.size());
  for (std::size_t i = 0; i < line.forms.size(); ++i) {
    m(0, i) = line.forms[i].coefficient({1, 0});
    m(1, i) = line.forms[i].coefficient({0, 1});
  }
  return m;
}

CurveParam random_line(int n, std::uint64_t seed) {
  if (n < 1) throw MathError("dimension n must be at least 1");
  SplitMix64 rng(seed);
  CurveParam c;
  c.degree = 1;
  do {
    c.forms.clear();
    for (int i = 0; i <= n; ++i) {
      const long a = rng.uniform(kCoefMin, kCoefMax);
      const long b = rng.uniform(kCoefMin, kCoefMax);
      c.forms.push_back(linear_form(a, b));
    }
  } while (rank(line_coefficients(c)) != 2);
  return c;
}

CurveParam rnc(int n, std::uint64_t seed) {
  if (n < 1) throw MathError("dimension n must be at least 1");
  const auto basis = monomials(2, n);
  CurveParam c;
  c.degree = n;
  if (seed == 0) {
    for (const auto& m : basis) c.forms.push_back(HomPoly::monomial(m));
    return c;
  }
  SplitMix64 rng(seed);
  const std::size_t k = basis.size();
  QMatrix change(k, k);
  do {
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t col = 0; col < k; ++col) change(r, col) = rng.uniform(kCoefMin, kCoefMax);
  } while (sgn(determinant(change)) == 0);
  for (std::size_t r = 0; r < k; ++r) {
    HomPoly f(2, n);
    for (std::size_t col = 0; col < k; ++col) f.add_term(basis[col], change(r, col));
    c.forms.push_back(std::move(f));
  }
  return c;
}

}  // namespace veronormal
