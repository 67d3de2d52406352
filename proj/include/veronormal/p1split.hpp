#pragma once

// Birkhoff-Grothendieck splitting types of bundles on P^1 given as cokernels
// of injective maps of twisted free sheaves.

#include <cstddef>
#include <vector>

#include "veronormal/gradedmap.hpp"

namespace veronormal {

struct SplittingType {
  std::vector<int> degrees;  // sorted descending

  SplittingType() = default;
  explicit SplittingType(std::vector<int> d);

  std::size_t rank() const { return degrees.size(); }
  long degree() const;

  friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

// Splitting type of coker(pres) for pres over (s, t).
//
// E^dual is the kernel of dual(pres); its graded module of sections is free
// over k[s, t], and each minimal generator in degree m contributes O(m) to E.
// Generators are found degree by degree as the part of the kernel not spanned
// by s- and t-multiples of the previous degree.
//
// Throws MathError("presentation not injective") or
// MathError("cokernel not locally free").
SplittingType splitting_type(const GradedMap& pres);

// Exact rank of pres as a matrix over Q(s, t): maximal rank among
// evaluations at enough points of P^1 to avoid the zeros of a minor.
std::size_t generic_rank(const GradedMap& pres);

// True iff the maximal minors of pres have no common zero on P^1.
// Requires pres injective. Combinations of minors with seeded random
// coefficients are tried first; the exact degree test decides the rest.
bool cokernel_locally_free(const GradedMap& pres);

// Degrees of a minimal generating set of the graded kernel module of the
// section maps of f over (s, t), scanning m in [m_lo, m_hi] until `expected`
// generators are found. Returned ascending.
std::vector<int> kernel_generator_degrees(const GradedMap& f, int m_lo, int m_hi, std::size_t expected);

// h^0(E(m)) = sum_i max(0, b_i + m + 1) for m in [m_lo, m_hi].
std::vector<long> h0_profile(const SplittingType& st, int m_lo, int m_hi);

// {b_i + b_j : i <= j}
SplittingType sym_square(const SplittingType& st);

}  // namespace veronormal
