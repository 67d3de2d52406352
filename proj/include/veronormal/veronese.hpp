#pragma once

// The specific maps attached to the d-th power Veronese embedding of
// P(V) = P^n: the normal-bundle presentation Theta, the contractions xi_i,
// their composites delta^i_d, and the slope statistics of the kernels K^i_d.

#include <string>
#include <vector>

#include "veronormal/exactalg.hpp"
#include "veronormal/gradedmap.hpp"

namespace veronormal {

class VeroneseContext {
 public:
  // Throws MathError for n < 1, and for d = 1 with the message the CLI
  // reports verbatim.
  VeroneseContext(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }
  int num_vars() const { return n_ + 1; }
  // dim Sym^d V = C(n + d, d)
  long sym_dim() const { return sym_dim_; }

 private:
  int n_;
  int d_;
  long sym_dim_;
};

// V (x) O(1-d) --> Sym^d V (x) O. Row gamma (|gamma| = d, grlex order),
// column i: dZ^gamma / dZ_i.
GradedMap theta_matrix(const VeroneseContext& ctx);

// Theta' : V (x) O(1) --> Sym^d V (x) O(d), the same entries. Its cokernel is
// the normal bundle of the Veronese variety.
GradedMap normal_presentation(const VeroneseContext& ctx);

// xi_i : Sym^i V (x) O(d-i) --> Sym^{i-1} V (x) O(d-i+1) for 1 <= i <= d.
// Column gamma maps to sum_j gamma_j Z_j e_{gamma - e_j}.
GradedMap xi_matrix(const VeroneseContext& ctx, int i);

// delta^i_d = xi_{d-i+1} o ... o xi_d : Sym^d V (x) O --> Sym^{d-i} V (x) O(i).
GradedMap delta_matrix(const VeroneseContext& ctx, int i);

// Euler sequence presentation O --> V (x) O(1), entries Z_0..Z_n; the cokernel
// is the tangent bundle of P^n.
GradedMap tangent_presentation(int n);

// Column (Z^gamma)_gamma : O(-d) --> Sym^d V (x) O, the pulled-back Euler
// section of the ambient space in the basis used by theta_matrix.
GradedMap veronese_section(const VeroneseContext& ctx);

// Column (Z_i)_i : O(-d) --> V (x) O(1-d), the Euler section of P^n twisted
// to land in the source of Theta.
GradedMap euler_section(const VeroneseContext& ctx);

struct DualIdentityReport {
  bool holds = false;
  // delta^{d-1}_d(i, gamma) = row_scale[i] * col_scale[gamma] * dual(Theta)(i, gamma)
  // when holds; row_scale[0] is normalized to 1.
  std::vector<Rat> row_scale;
  std::vector<Rat> col_scale;
  // Set when every entry ratio is the same scalar.
  bool uniform = false;
  Rat uniform_factor = 0;
  std::string diagnostic;
};

// Compares dual(theta_matrix) with delta_matrix(ctx, d - 1) entrywise and
// solves for the diagonal rescaling relating them.
DualIdentityReport verify_dual_identity(const VeroneseContext& ctx);

struct KBundleStats {
  int i = 0;
  BigInt rank;
  BigInt degree;
  Rat slope;
};

// Closed-form rank, degree and slope of K^i_d = ker delta^i_d, 1 <= i <= d+1.
KBundleStats k_bundle_stats(const VeroneseContext& ctx, int i);

}  // namespace veronormal
