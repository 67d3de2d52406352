#include "veronormal/p1split.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

#include "veronormal/errors.hpp"

namespace veronormal {

SplittingType::SplittingType(std::vector<int> d) : degrees(std::move(d)) {
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
}

long SplittingType::degree() const { return std::accumulate(degrees.begin(), degrees.end(), 0L); }

namespace {

Rat eval_binary(const HomPoly& f, const Rat& s, const Rat& t) {
  Rat acc = 0;
  for (const auto& [m, c] : f.terms()) {
    Rat term = c;
    for (int k = 0; k < m[0]; ++k) term *= s;
    for (int k = 0; k < m[1]; ++k) term *= t;
    acc += term;
  }
  return acc;
}

QMatrix evaluate(const GradedMap& f, const Rat& s, const Rat& t) {
  QMatrix out(f.rows(), f.cols());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) out(i, j) = eval_binary(f.entry(i, j), s, t);
  return out;
}

void require_binary(const GradedMap& f) {
  if (f.num_vars() != 2) throw std::invalid_argument("expected a map of sheaves on P^1 (two variables)");
}

// Binary form of degree `deg` whose dehomogenization is u.
HomPoly homogenize(const UniPoly& u, int deg) {
  HomPoly out(2, deg);
  for (int b = 0; b <= u.degree(); ++b) out.add_term({deg - b, b}, u.coeffs[b]);
  return out;
}

// Newton interpolation through (x_k, y_k), x_k = 0, 1, ..., N.
UniPoly interpolate(const std::vector<Rat>& ys) {
  const std::size_t n = ys.size();
  std::vector<Rat> div = ys;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t k = n - 1; k >= level; --k) div[k] = (div[k] - div[k - 1]) / Rat(static_cast<long>(level));
  UniPoly out;
  out.coeffs.assign(n, Rat(0));
  // Horner on the Newton basis prod (x - k).
  for (std::size_t k = n; k-- > 0;) {
    std::vector<Rat> next(n, Rat(0));
    for (std::size_t e = 0; e + 1 < n; ++e) {
      next[e + 1] += out.coeffs[e];
      next[e] -= out.coeffs[e] * Rat(static_cast<long>(k));
    }
    next[0] += div[k];
    out.coeffs = std::move(next);
  }
  out.trim();
  return out;
}

}  // namespace

std::size_t generic_rank(const GradedMap& pres) {
  require_binary(pres);
  // A nonzero r x r minor is a form of degree at most the sum of the column
  // degrees, so it cannot vanish at that many + 1 affine points.
  long bound = 0;
  for (std::size_t j = 0; j < pres.cols(); ++j) {
    int col_max = 0;
    for (std::size_t i = 0; i < pres.rows(); ++i)
      if (!pres.entry(i, j).is_zero()) col_max = std::max(col_max, pres.entry(i, j).degree());
    bound += col_max;
  }
  const std::size_t full = std::min(pres.rows(), pres.cols());
  std::size_t best = 0;
  for (long x = 0; x <= bound && best < full; ++x) best = std::max(best, rank(evaluate(pres, 1, x)));
  return best;
}

bool cokernel_locally_free(const GradedMap& pres) {
  require_binary(pres);
  const std::size_t p = pres.rows();
  const std::size_t q = pres.cols();
  if (q == 0) return true;
  if (generic_rank(pres) < q) throw MathError("presentation not injective");

  const int top = *std::max_element(pres.target_twists().begin(), pres.target_twists().end());
  long minor_degree = 0;
  for (int s : pres.source_twists()) minor_degree += top - s;

  // det(R * A) for R with random binary-form entries of degree top - t_i lies
  // in the ideal of maximal minors, so gcds of such determinants are
  // multiples of the gcd of all minors.
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::vector<HomPoly> dets;
  for (int attempt = 0; attempt < 6 && dets.size() < 4; ++attempt) {
    GradedMap mix(2, pres.target_twists(), std::vector<int>(q, top));
    for (std::size_t k = 0; k < q; ++k) {
      for (std::size_t i = 0; i < p; ++i) {
        HomPoly form(2, top - pres.target_twists()[i]);
        for (const auto& m : monomials(2, top - pres.target_twists()[i])) form.add_term(m, coef(rng));
        mix.set_entry(k, i, std::move(form));
      }
    }
    const GradedMap square = compose(mix, pres);
    std::vector<Rat> values;
    for (long x = 0; x <= minor_degree; ++x) values.push_back(determinant(evaluate(square, 1, x)));
    UniPoly det = interpolate(values);
    if (det.is_zero()) continue;
    dets.push_back(homogenize(det, static_cast<int>(minor_degree)));
    if (common_zero_degree(dets) == 0) return true;
  }

  // Exact decision: the kernel of dual(pres) has degree deficit equal to the
  // length of the torsion of the cokernel.
  const long expected = std::accumulate(pres.target_twists().begin(), pres.target_twists().end(), 0L) -
                        std::accumulate(pres.source_twists().begin(), pres.source_twists().end(), 0L);
  const int lo = *std::min_element(pres.target_twists().begin(), pres.target_twists().end());
  const long r = static_cast<long>(p - q);
  const int hi = static_cast<int>(expected - (r - 1) * lo);
  if (r == 0) return expected == 0;
  const auto gens = kernel_generator_degrees(dual(pres), lo, hi, p - q);
  return std::accumulate(gens.begin(), gens.end(), 0L) == expected;
}

std::vector<int> kernel_generator_degrees(const GradedMap& f, int m_lo, int m_hi, std::size_t expected) {
  require_binary(f);
  std::vector<int> gens;
  if (expected == 0) return gens;
  const auto& twists = f.source_twists();
  std::vector<QMatrix> prev;
  int prev_m = m_lo - 1;
  for (int m = m_lo; m <= m_hi && gens.size() < expected; ++m) {
    const std::vector<QMatrix> kernel = kernel_basis(stratum(f, m));
    std::size_t spanned = 0;
    if (!prev.empty()) {
      const auto off_prev = block_offsets(2, twists, prev_m);
      const auto off_cur = block_offsets(2, twists, m);
      const std::size_t height = off_cur.back();
      std::vector<QMatrix> multiples;
      multiples.reserve(2 * prev.size());
      for (const auto& v : prev) {
        QMatrix by_s(height, 1);
        QMatrix by_t(height, 1);
        for (std::size_t b = 0; b < twists.size(); ++b) {
          // Degree-k block: index a is s^(k-a) t^a, so s keeps a and t shifts it.
          for (std::size_t a = 0; off_prev[b] + a < off_prev[b + 1]; ++a) {
            const Rat& c = v(off_prev[b] + a, 0);
            if (sgn(c) == 0) continue;
            by_s(off_cur[b] + a, 0) = c;
            by_t(off_cur[b] + a + 1, 0) = c;
          }
        }
        multiples.push_back(std::move(by_s));
        multiples.push_back(std::move(by_t));
      }
      spanned = rank(hstack(multiples, height));
    }
    for (std::size_t k = spanned; k < kernel.size(); ++k) gens.push_back(m);
    prev = kernel;
    prev_m = m;
  }
  if (gens.size() > expected) throw std::logic_error("kernel module has more generators than its rank");
  return gens;
}

SplittingType splitting_type(const GradedMap& pres) {
  require_binary(pres);
  const std::size_t p = pres.rows();
  const std::size_t q = pres.cols();
  if (q > p || generic_rank(pres) < q) throw MathError("presentation not injective");
  if (!cokernel_locally_free(pres)) throw MathError("cokernel not locally free");
  if (p == q) return SplittingType{};

  const long expected = std::accumulate(pres.target_twists().begin(), pres.target_twists().end(), 0L) -
                        std::accumulate(pres.source_twists().begin(), pres.source_twists().end(), 0L);
  const int lo = *std::min_element(pres.target_twists().begin(), pres.target_twists().end());
  const long r = static_cast<long>(p - q);
  const int hi = static_cast<int>(expected - (r - 1) * lo);

  const auto gens = kernel_generator_degrees(dual(pres), lo, hi, p - q);
  if (gens.size() != p - q) throw std::logic_error("splitting scan ended before finding every generator");
  SplittingType st(gens);
  if (st.degree() != expected) throw MathError("cokernel not locally free");
  return st;
}

std::vector<long> h0_profile(const SplittingType& st, int m_lo, int m_hi) {
  if (m_lo > m_hi) throw std::invalid_argument("h0_profile: empty range");
  std::vector<long> out;
  for (int m = m_lo; m <= m_hi; ++m) {
    long h = 0;
    for (int b : st.degrees) h += std::max(0, b + m + 1);
    out.push_back(h);
  }
  return out;
}

SplittingType sym_square(const SplittingType& st) {
  std::vector<int> out;
  for (std::size_t i = 0; i < st.degrees.size(); ++i)
    for (std::size_t j = i; j < st.degrees.size(); ++j) out.push_back(st.degrees[i] + st.degrees[j]);
  return SplittingType(std::move(out));
}

}  // namespace veronormal
