#pragma once

// Maps between direct sums of twisted line bundles on projective space.
//
// A GradedMap F1 = (+)_j O(s_j)  -->  F0 = (+)_i O(t_i) is a p x q matrix of
// forms with entry (i, j) homogeneous of degree t_i - s_j. Sections of O(a)
// twisted by m are the forms of degree a + m.

#include <cstddef>
#include <vector>

#include "veronormal/exactalg.hpp"
#include "veronormal/polyring.hpp"

namespace veronormal {

class GradedMap {
 public:
  GradedMap() = default;
  // Zero map with the given twists.
  GradedMap(int num_vars, std::vector<int> source_twists, std::vector<int> target_twists);

  static GradedMap identity(int num_vars, const std::vector<int>& twists);

  int num_vars() const { return num_vars_; }
  const std::vector<int>& source_twists() const { return source_; }
  const std::vector<int>& target_twists() const { return target_; }
  std::size_t rows() const { return target_.size(); }
  std::size_t cols() const { return source_.size(); }

  const HomPoly& entry(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
  // Sets entry (i, j); throws if p is nonzero and not of degree t_i - s_j.
  void set_entry(std::size_t i, std::size_t j, HomPoly p);

  friend bool operator==(const GradedMap& a, const GradedMap& b);

 private:
  int num_vars_ = 0;
  std::vector<int> source_;
  std::vector<int> target_;
  std::vector<HomPoly> entries_;
};

// Parametrized rational curve P^1 -> P^n by n+1 binary forms of degree e.
struct CurveParam {
  int degree = 1;
  std::vector<HomPoly> forms;

  int ambient_vars() const { return static_cast<int>(forms.size()); }
};

// Throws MathError("parametrization has base point") if the forms share a
// zero, and MathError("inhomogeneous parametrization") on degree mismatch.
void check_base_point_free(const CurveParam& c);

GradedMap compose(const GradedMap& g, const GradedMap& f);
GradedMap dual(const GradedMap& f);
GradedMap pullback(const GradedMap& f, const CurveParam& c);

// Induced linear map on sections of twist m, in the grlex monomial bases of
// each summand, blocks ordered by summand index.
QMatrix stratum(const GradedMap& f, int m);

// Dimension of the sections of (+)_k O(twists_k + m).
std::size_t section_dimension(int num_vars, const std::vector<int>& twists, int m);

// Offsets of each summand's block inside the section vector of twist m.
std::vector<std::size_t> block_offsets(int num_vars, const std::vector<int>& twists, int m);

}  // namespace veronormal
