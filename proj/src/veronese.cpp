#include "veronormal/veronese.hpp"

#include <deque>
#include <optional>
#include <sstream>

#include "veronormal/errors.hpp"

namespace veronormal {

VeroneseContext::VeroneseContext(int n, int d) : n_(n), d_(d) {
  if (n < 1) throw MathError("dimension n must be at least 1");
  if (d == 1) throw MathError("Veronese with d=1 is an isomorphism; normal bundle is zero");
  if (d < 1) throw MathError("degree d must be at least 2");
  sym_dim_ = binomial(n + d, d).get_si();
}

namespace {

GradedMap theta_entries(const VeroneseContext& ctx, int source_twist, int target_twist) {
  const int k = ctx.num_vars();
  const auto rows = monomials(k, ctx.d());
  GradedMap out(k, std::vector<int>(k, source_twist), std::vector<int>(rows.size(), target_twist));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const HomPoly z_gamma = HomPoly::monomial(rows[r]);
    for (int i = 0; i < k; ++i) out.set_entry(r, i, differentiate(z_gamma, i));
  }
  return out;
}

}  // namespace

GradedMap theta_matrix(const VeroneseContext& ctx) { return theta_entries(ctx, 1 - ctx.d(), 0); }

GradedMap normal_presentation(const VeroneseContext& ctx) { return theta_entries(ctx, 1, ctx.d()); }

GradedMap xi_matrix(const VeroneseContext& ctx, int i) {
  if (i < 1 || i > ctx.d()) throw MathError("xi_matrix: level i out of range [1, d]");
  const int k = ctx.num_vars();
  const auto cols = monomials(k, i);
  const auto rows = monomials(k, i - 1);
  GradedMap out(k, std::vector<int>(cols.size(), ctx.d() - i), std::vector<int>(rows.size(), ctx.d() - i + 1));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (int j = 0; j < k; ++j) {
      if (cols[c][j] == 0) continue;
      Monomial beta = cols[c];
      beta[j] -= 1;
      out.set_entry(monomial_index(beta), c, HomPoly::variable(k, j) * Rat(cols[c][j]));
    }
  }
  return out;
}

GradedMap delta_matrix(const VeroneseContext& ctx, int i) {
  if (i < 1 || i > ctx.d()) throw MathError("delta_matrix: level i out of range [1, d]");
  GradedMap acc = xi_matrix(ctx, ctx.d());
  for (int level = ctx.d() - 1; level >= ctx.d() - i + 1; --level) acc = compose(xi_matrix(ctx, level), acc);
  return acc;
}

GradedMap tangent_presentation(int n) {
  if (n < 1) throw MathError("dimension n must be at least 1");
  const int k = n + 1;
  GradedMap out(k, {0}, std::vector<int>(k, 1));
  for (int i = 0; i < k; ++i) out.set_entry(i, 0, HomPoly::variable(k, i));
  return out;
}

GradedMap veronese_section(const VeroneseContext& ctx) {
  const int k = ctx.num_vars();
  const auto rows = monomials(k, ctx.d());
  GradedMap out(k, {-ctx.d()}, std::vector<int>(rows.size(), 0));
  for (std::size_t r = 0; r < rows.size(); ++r) out.set_entry(r, 0, HomPoly::monomial(rows[r]));
  return out;
}

GradedMap euler_section(const VeroneseContext& ctx) {
  const int k = ctx.num_vars();
  GradedMap out(k, {-ctx.d()}, std::vector<int>(k, 1 - ctx.d()));
  for (int i = 0; i < k; ++i) out.set_entry(i, 0, HomPoly::variable(k, i));
  return out;
}

namespace {

// Scalar lambda with b = lambda * a, if one exists. Both nonzero.
std::optional<Rat> proportionality(const HomPoly& a, const HomPoly& b) {
  if (a.terms().size() != b.terms().size()) return std::nullopt;
  const auto& [m0, c0] = *a.terms().begin();
  const Rat lambda = b.coefficient(m0) / c0;
  if (sgn(lambda) == 0) return std::nullopt;
  for (const auto& [m, c] : a.terms()) {
    if (b.coefficient(m) != lambda * c) return std::nullopt;
  }
  return lambda;
}

}  // namespace

DualIdentityReport verify_dual_identity(const VeroneseContext& ctx) {
  DualIdentityReport rep;
  const GradedMap lhs = dual(theta_matrix(ctx));
  const GradedMap rhs = delta_matrix(ctx, ctx.d() - 1);
  std::ostringstream diag;

  if (lhs.source_twists() != rhs.source_twists() || lhs.target_twists() != rhs.target_twists()) {
    rep.diagnostic = "twist mismatch between dual(Theta) and delta^{d-1}_d";
    return rep;
  }
  const std::size_t rows = lhs.rows();
  const std::size_t cols = lhs.cols();

  // Entry ratios; an entry zero on one side only breaks the identity.
  std::vector<std::optional<Rat>> ratio(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const HomPoly& a = lhs.entry(i, j);
      const HomPoly& b = rhs.entry(i, j);
      if (a.is_zero() != b.is_zero()) {
        diag << "support mismatch at (" << i << "," << j << ")";
        rep.diagnostic = diag.str();
        return rep;
      }
      if (a.is_zero()) continue;
      auto lambda = proportionality(a, b);
      if (!lambda) {
        diag << "entries at (" << i << "," << j << ") are not proportional: " << to_string(a) << " vs "
             << to_string(b);
        rep.diagnostic = diag.str();
        return rep;
      }
      ratio[i * cols + j] = *lambda;
    }
  }

  // Solve ratio(i, j) = row_scale[i] * col_scale[j] over the bipartite
  // support graph, anchoring row 0 of each component.
  std::vector<std::optional<Rat>> row_scale(rows);
  std::vector<std::optional<Rat>> col_scale(cols);
  for (std::size_t anchor = 0; anchor < rows; ++anchor) {
    if (row_scale[anchor]) continue;
    row_scale[anchor] = Rat(1);
    std::deque<std::pair<bool, std::size_t>> queue{{true, anchor}};
    while (!queue.empty()) {
      auto [is_row, idx] = queue.front();
      queue.pop_front();
      if (is_row) {
        for (std::size_t j = 0; j < cols; ++j) {
          const auto& r = ratio[idx * cols + j];
          if (!r) continue;
          const Rat want = *r / *row_scale[idx];
          if (!col_scale[j]) {
            col_scale[j] = want;
            queue.emplace_back(false, j);
          } else if (*col_scale[j] != want) {
            diag << "rescaling is not diagonal: inconsistent ratio at (" << idx << "," << j << ")";
            rep.diagnostic = diag.str();
            return rep;
          }
        }
      } else {
        for (std::size_t i = 0; i < rows; ++i) {
          const auto& r = ratio[i * cols + idx];
          if (!r) continue;
          const Rat want = *r / *col_scale[idx];
          if (!row_scale[i]) {
            row_scale[i] = want;
            queue.emplace_back(true, i);
          } else if (*row_scale[i] != want) {
            diag << "rescaling is not diagonal: inconsistent ratio at (" << i << "," << idx << ")";
            rep.diagnostic = diag.str();
            return rep;
          }
        }
      }
    }
  }

  rep.holds = true;
  for (auto& r : row_scale) rep.row_scale.push_back(r.value_or(Rat(1)));
  for (auto& c : col_scale) rep.col_scale.push_back(c.value_or(Rat(1)));

  std::optional<Rat> common;
  rep.uniform = true;
  for (const auto& r : ratio) {
    if (!r) continue;
    if (!common) common = *r;
    else if (*common != *r) rep.uniform = false;
  }
  if (rep.uniform && common) rep.uniform_factor = *common;

  if (rep.uniform) {
    diag << "delta^{d-1}_d = " << to_string(rep.uniform_factor) << " * dual(Theta)";
    if (rep.uniform_factor == 1) diag << " (literal equality)";
  } else {
    diag << "delta^{d-1}_d = R * dual(Theta) * C with R = diag(";
    for (std::size_t i = 0; i < rows; ++i) diag << (i ? "," : "") << to_string(rep.row_scale[i]);
    diag << "), C = diag(";
    for (std::size_t j = 0; j < cols; ++j) diag << (j ? "," : "") << to_string(rep.col_scale[j]);
    diag << ")";
  }
  rep.diagnostic = diag.str();
  return rep;
}

KBundleStats k_bundle_stats(const VeroneseContext& ctx, int i) {
  const int n = ctx.n();
  const int d = ctx.d();
  if (i < 1 || i > d + 1) throw MathError("k_bundle_stats: level i out of range [1, d+1]");
  KBundleStats s;
  s.i = i;
  // C(n + d - i, d - i), with C(n - 1, -1) = 0 at i = d + 1.
  const BigInt quotient_rank = i == d + 1 ? BigInt(0) : binomial(n + d - i, d - i);
  s.rank = binomial(n + d, d) - quotient_rank;
  s.degree = -i * quotient_rank;
  s.slope = Rat(s.degree, s.rank);
  s.slope.canonicalize();
  return s;
}

}  // namespace veronormal
