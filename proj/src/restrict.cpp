#include "veronormal/restrict.hpp"

#include "veronormal/errors.hpp"

namespace veronormal {

SplittingType restrict_normal(const VeroneseContext& ctx, const CurveParam& c) {
  return splitting_type(pullback(normal_presentation(ctx), c));
}

SplittingType restrict_tangent(int n, const CurveParam& c) {
  return splitting_type(pullback(tangent_presentation(n), c));
}

SplittingType restrict_k_bundle(const VeroneseContext& ctx, int i, const CurveParam& c) {
  if (i == ctx.d() + 1) return SplittingType(std::vector<int>(static_cast<std::size_t>(ctx.sym_dim()), 0));
  const SplittingType dual_type = splitting_type(dual(pullback(delta_matrix(ctx, i), c)));
  std::vector<int> neg;
  for (int b : dual_type.degrees) neg.push_back(-b);
  return SplittingType(std::move(neg));
}

SplittingType expected_quadric_on_line(int n) {
  std::vector<int> d{4};
  for (int k = 0; k < n - 1; ++k) d.push_back(3);
  for (int k = 0; k < n * (n - 1) / 2; ++k) d.push_back(2);
  return SplittingType(std::move(d));
}

SplittingType expected_quadric_on_rnc(int n) {
  return SplittingType(std::vector<int>(static_cast<std::size_t>(n * (n + 1) / 2), 2 * n + 2));
}

}  // namespace veronormal
