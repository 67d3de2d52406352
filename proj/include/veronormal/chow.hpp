#pragma once

// Chow ring of P^n truncated at xi^{n+1}, Hilbert polynomials of
// presentations, and the Grauert-Mulich checks on splitting types.

#include <vector>

#include "veronormal/exactalg.hpp"
#include "veronormal/gradedmap.hpp"
#include "veronormal/p1split.hpp"
#include "veronormal/veronese.hpp"

namespace veronormal {

class ChowClass {
 public:
  // Zero class in A(P^n).
  explicit ChowClass(int n);
  ChowClass(int n, std::vector<Rat> coeffs);

  static ChowClass one(int n);
  // 1 + a*xi
  static ChowClass linear(int n, const Rat& a);

  int n() const { return n_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& operator[](int k) const { return coeffs_[k]; }

  // Truncated inverse; requires constant term nonzero.
  ChowClass inverse() const;
  ChowClass pow(long e) const;  // negative e uses inverse()

  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator/(const ChowClass& a, const ChowClass& b) { return a * b.inverse(); }
  friend bool operator==(const ChowClass& a, const ChowClass& b) = default;

 private:
  int n_;
  std::vector<Rat> coeffs_;
};

// c(N) = (1 + d xi)^{C(n+d,d)} / (1 + xi)^{n+1}
ChowClass chern_normal(const VeroneseContext& ctx);

struct BundleStats {
  Rat rank;
  Rat degree;
  Rat slope;
};

BundleStats normal_stats(const VeroneseContext& ctx);

// P(E)(m) = sum_i alpha_i m^i / i!
class HilbertPoly {
 public:
  HilbertPoly() = default;
  explicit HilbertPoly(std::vector<Rat> alpha) : alpha_(std::move(alpha)) {}

  const std::vector<Rat>& alpha() const { return alpha_; }
  // Coefficients of m^k.
  std::vector<Rat> power_coeffs() const;
  Rat operator()(const Rat& m) const;

  friend bool operator==(const HilbertPoly&, const HilbertPoly&) = default;

 private:
  std::vector<Rat> alpha_;
};

// Hilbert polynomial of the coker of an injective presentation on P^n:
// sum_i C(n + t_i + m, n) - sum_j C(n + s_j + m, n).
HilbertPoly hilbert_poly(const GradedMap& pres);

// Hilbert polynomial of O(a) on P^n.
HilbertPoly hilbert_poly_line_bundle(int n, int a);

// rank = alpha_n(E) / alpha_n(O); degree = alpha_{n-1}(E) - rank * alpha_{n-1}(O).
BundleStats stats_from_hilbert(const HilbertPoly& p, int n);

struct GrauertMulichReport {
  bool spread_ok = false;
  bool sum_ok = false;
  bool rank_ok = false;
  std::vector<int> degrees;
  BigInt expected_sum;
  BigInt expected_rank;

  bool all_ok() const { return spread_ok && sum_ok && rank_ok; }
};

// Checks gaps b_i - b_{i+1} in {0, 1}, and degree/rank against the closed
// forms for the Veronese normal bundle restricted to a curve of the given
// degree (1 for lines, where the gap bound is the Grauert-Mulich bound).
GrauertMulichReport gm_check(const SplittingType& st, const VeroneseContext& ctx, int curve_degree = 1);

}  // namespace veronormal
