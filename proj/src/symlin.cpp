#include "veronormal/symlin.hpp"

#include "veronormal/errors.hpp"
#include "veronormal/polyring.hpp"
#include "veronormal/splitmix.hpp"

namespace veronormal::symlin {

void validate(const LinearSES& ses) {
  const std::size_t m = ses.phi.cols();
  const std::size_t n = ses.phi.rows();
  const std::size_t p = ses.psi.rows();
  if (ses.psi.cols() != n) throw MathError("LinearSES: psi and phi do not compose");
  if (n != m + p) throw MathError("LinearSES: dimensions are not additive");
  if (rank(ses.phi) != m) throw MathError("LinearSES: phi is not injective");
  if (rank(ses.psi) != p) throw MathError("LinearSES: psi is not surjective");
  if (!(ses.psi * ses.phi).is_zero()) throw MathError("LinearSES: psi * phi is not zero");
}

LinearSES random_ses(int m, int n, std::uint64_t seed) {
  if (m < 0 || n < m) throw MathError("random_ses: need 0 <= m <= n");
  SplitMix64 rng(seed);
  QMatrix phi(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
  do {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < m; ++c) phi(r, c) = rng.uniform(-3, 3);
  } while (rank(phi) != static_cast<std::size_t>(m));

  const auto left_kernel = kernel_basis(phi.transpose());
  QMatrix psi(left_kernel.size(), static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < left_kernel.size(); ++r)
    for (int c = 0; c < n; ++c) psi(r, c) = left_kernel[r](c, 0);
  return {std::move(phi), std::move(psi)};
}

namespace {

// Linear form sum_r f(r, col) W_r in the target space's variables.
HomPoly image_of_basis_vector(const QMatrix& f, std::size_t col) {
  const int b = static_cast<int>(f.rows());
  HomPoly out(b, 1);
  for (int r = 0; r < b; ++r) out += HomPoly::variable(b, r) * f(r, col);
  return out;
}

Rat factorial(int k) {
  Rat f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

Rat multi_factorial(const Monomial& a) {
  Rat f = 1;
  for (int e : a) f *= factorial(e);
  return f;
}

}  // namespace

QMatrix sym_power(const QMatrix& f, int i) {
  if (i < 0) throw MathError("sym_power: negative degree");
  const int a = static_cast<int>(f.cols());
  const int b = static_cast<int>(f.rows());
  const auto src = monomials(a, i);
  QMatrix out(monomial_count(b, i), src.size());
  if (b == 0) return out;
  std::vector<HomPoly> images;
  for (int c = 0; c < a; ++c) images.push_back(image_of_basis_vector(f, c));
  for (std::size_t col = 0; col < src.size(); ++col) {
    HomPoly prod = HomPoly::constant(b, 1);
    for (int c = 0; c < a; ++c)
      for (int k = 0; k < src[col][c]; ++k) prod = multiply(prod, images[c]);
    for (const auto& [mono, coeff] : prod.terms()) out(monomial_index(mono), col) = coeff;
  }
  return out;
}

QMatrix pairing_matrix(int dim, int i) {
  const auto basis = monomials(dim, i);
  QMatrix g(basis.size(), basis.size());
  const Rat fi = factorial(i);
  for (std::size_t k = 0; k < basis.size(); ++k) g(k, k) = multi_factorial(basis[k]) / fi;
  return g;
}

namespace {

QMatrix diagonal_inverse(const QMatrix& g) {
  QMatrix inv(g.rows(), g.cols());
  for (std::size_t k = 0; k < g.rows(); ++k) inv(k, k) = 1 / g(k, k);
  return inv;
}

// Pairing on Sym^{i-1} N (x) M with M carrying the identity pairing.
QMatrix tensor_pairing(int n, int m, int i) {
  const QMatrix g = pairing_matrix(n, i - 1);
  QMatrix out(g.rows() * static_cast<std::size_t>(m), g.cols() * static_cast<std::size_t>(m));
  for (std::size_t a = 0; a < g.rows(); ++a)
    for (int k = 0; k < m; ++k) out(a * m + k, a * m + k) = g(a, a);
  return out;
}

}  // namespace

QMatrix dualized_sym_injection(const LinearSES& ses, int i) {
  const int n = static_cast<int>(ses.psi.cols());
  const int p = static_cast<int>(ses.psi.rows());
  const QMatrix s = sym_power(ses.psi, i);
  return diagonal_inverse(pairing_matrix(n, i)) * s.transpose() * pairing_matrix(p, i);
}

QMatrix dualized_sym_quotient(const LinearSES& ses, int i) {
  if (i < 1) throw MathError("quotient map needs i >= 1");
  const int n = static_cast<int>(ses.phi.rows());
  const int m = static_cast<int>(ses.phi.cols());
  // Injection Sym^{i-1} N (x) M -> Sym^i N, [a] (x) b |-> a * phi(b).
  const auto lower = monomials(n, i - 1);
  QMatrix inj(monomial_count(n, i), lower.size() * static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    const HomPoly phi_b = image_of_basis_vector(ses.phi, static_cast<std::size_t>(k));
    for (std::size_t a = 0; a < lower.size(); ++a) {
      const HomPoly prod = multiply(HomPoly::monomial(lower[a]), phi_b);
      for (const auto& [mono, coeff] : prod.terms()) inj(monomial_index(mono), a * m + k) = coeff;
    }
  }
  return diagonal_inverse(tensor_pairing(n, m, i)) * inj.transpose() * pairing_matrix(n, i);
}

QMatrix quotient_map(const LinearSES& ses, int i) {
  if (i < 1) throw MathError("quotient map needs i >= 1");
  const int n = static_cast<int>(ses.phi.rows());
  const int m = static_cast<int>(ses.phi.cols());
  const auto upper = monomials(n, i);
  QMatrix out(monomial_count(n, i - 1) * static_cast<std::size_t>(m), upper.size());
  const Rat inv_i = Rat(1, i);
  for (std::size_t col = 0; col < upper.size(); ++col) {
    const Monomial& beta = upper[col];
    for (int j = 0; j < n; ++j) {
      if (beta[j] == 0) continue;
      Monomial alpha = beta;
      alpha[j] -= 1;
      const std::size_t a = monomial_index(alpha);
      // Removing each of the beta_j copies of l_j gives the same summand.
      for (int k = 0; k < m; ++k) {
        out(a * m + k, col) += inv_i * beta[j] * ses.phi(j, k);
      }
    }
  }
  return out;
}

CommuteReport check_commute(const LinearSES& ses, int i) {
  validate(ses);
  CommuteReport rep;
  rep.injection_equal = dualized_sym_injection(ses, i) == sym_power(ses.psi.transpose(), i);
  rep.quotient_equal = dualized_sym_quotient(ses, i) == quotient_map(ses, i);
  return rep;
}

}  // namespace veronormal::symlin
