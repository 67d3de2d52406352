#include "veronormal/chow.hpp"

#include <stdexcept>

#include "veronormal/errors.hpp"
#include "veronormal/polyring.hpp"

namespace veronormal {

ChowClass::ChowClass(int n) : n_(n), coeffs_(static_cast<std::size_t>(n + 1), Rat(0)) {
  if (n < 0) throw std::invalid_argument("ChowClass: negative dimension");
}

ChowClass::ChowClass(int n, std::vector<Rat> coeffs) : ChowClass(n) {
  for (std::size_t k = 0; k < coeffs.size() && k <= static_cast<std::size_t>(n); ++k) coeffs_[k] = coeffs[k];
}

ChowClass ChowClass::one(int n) {
  ChowClass c(n);
  c.coeffs_[0] = 1;
  return c;
}

ChowClass ChowClass::linear(int n, const Rat& a) {
  ChowClass c = one(n);
  if (n >= 1) c.coeffs_[1] = a;
  return c;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("ChowClass product: dimension mismatch");
  ChowClass out(a.n_);
  for (int i = 0; i <= a.n_; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (int j = 0; i + j <= a.n_; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

ChowClass ChowClass::inverse() const {
  if (sgn(coeffs_[0]) == 0) throw MathError("ChowClass: class with zero constant term is not invertible");
  // Solve (this * inv)_k = [k == 0] term by term.
  ChowClass inv(n_);
  inv.coeffs_[0] = 1 / coeffs_[0];
  for (int k = 1; k <= n_; ++k) {
    Rat acc = 0;
    for (int j = 1; j <= k; ++j) acc += coeffs_[j] * inv.coeffs_[k - j];
    inv.coeffs_[k] = -acc / coeffs_[0];
  }
  return inv;
}

ChowClass ChowClass::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  ChowClass result = one(n_);
  ChowClass base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

ChowClass chern_normal(const VeroneseContext& ctx) {
  const int n = ctx.n();
  return ChowClass::linear(n, ctx.d()).pow(ctx.sym_dim()) / ChowClass::linear(n, 1).pow(n + 1);
}

BundleStats normal_stats(const VeroneseContext& ctx) {
  BundleStats s;
  s.rank = ctx.sym_dim() - ctx.n() - 1;
  s.degree = Rat(ctx.sym_dim()) * ctx.d() - (ctx.n() + 1);
  s.slope = s.degree / s.rank;
  return s;
}

namespace {

Rat factorial(int k) {
  Rat f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Coefficients in m of C(n + a + m, n) = prod_{k=1}^n (m + a + k) / n!.
std::vector<Rat> binomial_in_m(int n, int a) {
  std::vector<Rat> c{Rat(1)};
  for (int k = 1; k <= n; ++k) {
    std::vector<Rat> next(c.size() + 1, Rat(0));
    for (std::size_t e = 0; e < c.size(); ++e) {
      next[e + 1] += c[e];
      next[e] += c[e] * (a + k);
    }
    c = std::move(next);
  }
  const Rat nf = factorial(n);
  for (auto& x : c) x /= nf;
  return c;
}

HilbertPoly from_power_coeffs(const std::vector<Rat>& c) {
  std::vector<Rat> alpha(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) alpha[k] = c[k] * factorial(static_cast<int>(k));
  return HilbertPoly(std::move(alpha));
}

}  // namespace

std::vector<Rat> HilbertPoly::power_coeffs() const {
  std::vector<Rat> c(alpha_.size());
  for (std::size_t k = 0; k < alpha_.size(); ++k) c[k] = alpha_[k] / factorial(static_cast<int>(k));
  return c;
}

Rat HilbertPoly::operator()(const Rat& m) const {
  const auto c = power_coeffs();
  Rat acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * m + c[k];
  return acc;
}

HilbertPoly hilbert_poly_line_bundle(int n, int a) { return from_power_coeffs(binomial_in_m(n, a)); }

HilbertPoly hilbert_poly(const GradedMap& pres) {
  const int n = pres.num_vars() - 1;
  std::vector<Rat> c(static_cast<std::size_t>(n + 1), Rat(0));
  for (int t : pres.target_twists()) {
    const auto b = binomial_in_m(n, t);
    for (std::size_t k = 0; k < b.size(); ++k) c[k] += b[k];
  }
  for (int s : pres.source_twists()) {
    const auto b = binomial_in_m(n, s);
    for (std::size_t k = 0; k < b.size(); ++k) c[k] -= b[k];
  }
  return from_power_coeffs(c);
}

BundleStats stats_from_hilbert(const HilbertPoly& p, int n) {
  const HilbertPoly o = hilbert_poly_line_bundle(n, 0);
  BundleStats s;
  s.rank = p.alpha()[n] / o.alpha()[n];
  s.degree = n >= 1 ? p.alpha()[n - 1] - s.rank * o.alpha()[n - 1] : Rat(0);
  s.slope = sgn(s.rank) != 0 ? s.degree / s.rank : Rat(0);
  return s;
}

GrauertMulichReport gm_check(const SplittingType& st, const VeroneseContext& ctx, int curve_degree) {
  GrauertMulichReport rep;
  rep.degrees = st.degrees;
  rep.expected_rank = ctx.sym_dim() - ctx.n() - 1;
  rep.expected_sum = curve_degree * (BigInt(ctx.sym_dim()) * ctx.d() - (ctx.n() + 1));
  rep.spread_ok = true;
  for (std::size_t i = 0; i + 1 < st.degrees.size(); ++i) {
    const int gap = st.degrees[i] - st.degrees[i + 1];
    if (gap < 0 || gap > 1) rep.spread_ok = false;
  }
  rep.sum_ok = BigInt(st.degree()) == rep.expected_sum;
  rep.rank_ok = BigInt(static_cast<long>(st.rank())) == rep.expected_rank;
  return rep;
}

}  // namespace veronormal
