#pragma once

// Sparse homogeneous polynomials over Q in variables Z0..Z{k-1}. Binary
// forms in (s, t) are the k = 2 case with s = Z0 and t = Z1.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "veronormal/exactalg.hpp"

namespace veronormal {

using Monomial = std::vector<int>;

int total_degree(const Monomial& m);

// Graded-lexicographic order. Within one degree, larger exponent of Z0 comes
// first, so monomials(2, 2) is Z0^2, Z0*Z1, Z1^2.
struct GrlexBefore {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// All monomials of total degree `degree` in `num_vars` variables, in grlex
// order. Empty when degree < 0.
std::vector<Monomial> monomials(int num_vars, int degree);

// Number of monomials of the given degree: C(num_vars - 1 + degree, degree).
std::size_t monomial_count(int num_vars, int degree);

// Position of `m` inside monomials(m.size(), total_degree(m)).
std::size_t monomial_index(const Monomial& m);

BigInt binomial(long n, long k);

class HomPoly {
 public:
  using Terms = std::map<Monomial, Rat, GrlexBefore>;

  HomPoly() = default;
  // The zero polynomial, nominally of the given degree.
  HomPoly(int num_vars, int degree);

  static HomPoly constant(int num_vars, const Rat& c);
  static HomPoly variable(int num_vars, int index);
  static HomPoly monomial(const Monomial& m, const Rat& c = 1);

  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rat coefficient(const Monomial& m) const;
  // Adds c to the coefficient of m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rat& c);

  HomPoly operator-() const;
  HomPoly& operator+=(const HomPoly& o);
  HomPoly& operator-=(const HomPoly& o);
  HomPoly& operator*=(const Rat& c);

  friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
  friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }
  friend HomPoly operator*(HomPoly a, const Rat& c) { return a *= c; }
  friend HomPoly operator*(const Rat& c, HomPoly a) { return a *= c; }
  friend HomPoly operator*(const HomPoly& a, const HomPoly& b) { return multiply(a, b); }

  // Zero polynomials compare equal regardless of nominal degree.
  friend bool operator==(const HomPoly& a, const HomPoly& b);

  friend HomPoly multiply(const HomPoly& p, const HomPoly& q);

 private:
  int num_vars_ = 0;
  int degree_ = 0;
  Terms terms_;
};

HomPoly multiply(const HomPoly& p, const HomPoly& q);
HomPoly differentiate(const HomPoly& p, int var);
HomPoly power(const HomPoly& p, int exponent);

// Substitutes forms[i] for Z_i. All forms must share one degree.
HomPoly substitute(const HomPoly& p, const std::vector<HomPoly>& forms);

// Renders as "c*Z0^a0*Z1^a1 + ..." in grlex order; "0" for zero.
std::string to_string(const HomPoly& p);

// Inverse of to_string. Also accepts s and t for Z0 and Z1 when
// num_vars == 2, omitted coefficients, and arbitrary spacing. The zero
// polynomial gets nominal degree `zero_degree`.
HomPoly parse_poly(const std::string& text, int num_vars, int zero_degree = 0);

// Dense univariate polynomial over Q, coefficients from the constant term up.
struct UniPoly {
  std::vector<Rat> coeffs;

  int degree() const;  // -1 for zero
  bool is_zero() const { return degree() < 0; }
  void trim();
};

UniPoly uni_rem(const UniPoly& a, const UniPoly& b);
UniPoly uni_gcd(UniPoly a, UniPoly b);

// f(1, x) for a binary form f(s, t).
UniPoly dehomogenize(const HomPoly& binary_form);

// Degree of the gcd of the nonzero binary forms, i.e. the number of common
// zeros on P^1 counted with multiplicity. All-zero input returns -1.
int common_zero_degree(const std::vector<HomPoly>& binary_forms);

}  // namespace veronormal
