#pragma once

#include <vector>

#include "veronormal/gradedmap.hpp"
#include "veronormal/p1split.hpp"
#include "veronormal/veronese.hpp"

namespace veronormal {

// Splitting type of the Veronese normal bundle pulled back along c.
SplittingType restrict_normal(const VeroneseContext& ctx, const CurveParam& c);

// Splitting type of the tangent bundle of P^n pulled back along c.
SplittingType restrict_tangent(int n, const CurveParam& c);

// Splitting type of K^i_d pulled back along c, computed as the negated
// splitting type of coker(dual(delta^i_d)) on P^1. For i = d + 1 the bundle
// is trivial of rank C(n+d, d).
SplittingType restrict_k_bundle(const VeroneseContext& ctx, int i, const CurveParam& c);

// Expected multisets for the quadric Veronese.
SplittingType expected_quadric_on_line(int n);  // 4, 3^(n-1), 2^(n(n-1)/2)
SplittingType expected_quadric_on_rnc(int n);   // (2n+2)^(n(n+1)/2)

}  // namespace veronormal
