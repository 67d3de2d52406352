#pragma once

// Lines and rational normal curves in P^n, standard and seeded-random.

#include <cstdint>

#include "veronormal/gradedmap.hpp"

namespace veronormal {

// (s, t, 0, ..., 0)
CurveParam standard_line(int n);

// (a_i s + b_i t)_i with a_i, b_i uniform in [-9, 9] from SplitMix64(seed),
// drawn in the order a_0, b_0, a_1, b_1, ...; redrawn until the 2 x (n+1)
// coefficient matrix has rank 2.
CurveParam random_line(int n, std::uint64_t seed);

// seed 0: (s^n, s^{n-1} t, ..., t^n). Other seeds: M * (s^n, ..., t^n) with
// M an (n+1) x (n+1) integer matrix with entries in [-9, 9], drawn row-major
// from SplitMix64(seed) and redrawn until det M != 0.
CurveParam rnc(int n, std::uint64_t seed);

// The 2 x (n+1) coefficient matrix of a degree-1 parametrization.
QMatrix line_coefficients(const CurveParam& line);

}  // namespace veronormal
