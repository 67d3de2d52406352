#pragma once

// Symmetric powers of linear maps over Q and the two ways of producing the
// dual symmetrized short exact sequence
//   0 -> Sym^i P* -> Sym^i N* -> Sym^{i-1} N* (x) M* -> 0
// from 0 -> M --phi--> N --psi--> P -> 0.
//
// Sym^i of a k-dimensional space uses the grlex monomial basis of degree i in
// k variables. The pairing between Sym^i W* and Sym^i W is the averaged one,
//   <l_1...l_i, v_1...v_i> = (1/i!) sum_sigma prod_k l_sigma(k)(v_k),
// which on monomial bases is diagonal with entries alpha!/i!.

#include <cstdint>
#include <string>

#include "veronormal/exactalg.hpp"

namespace veronormal::symlin {

struct LinearSES {
  QMatrix phi;  // n x m, injective
  QMatrix psi;  // p x n, surjective, psi * phi = 0
};

// Throws MathError unless phi injective, psi surjective, and the sequence is
// exact in the middle.
void validate(const LinearSES& ses);

// Seeded random exact sequence: phi has entries in [-3, 3] and full column
// rank (resampled otherwise); the rows of psi are a basis of ker(phi^T).
LinearSES random_ses(int m, int n, std::uint64_t seed);

// Matrix of Sym^i f : Sym^i k^a -> Sym^i k^b for f of shape b x a.
QMatrix sym_power(const QMatrix& f, int i);

// Diagonal of the averaged pairing on Sym^i of a dim-dimensional space.
QMatrix pairing_matrix(int dim, int i);

// Procedure (2) quotient map Sym^i N* -> Sym^{i-1} N* (x) M*:
//   l_1...l_i |-> (1/i) sum_k [l_1..^l_k..l_i] (x) phi*(l_k).
// Rows are indexed by (alpha, k) with alpha the Sym^{i-1} index major.
QMatrix quotient_map(const LinearSES& ses, int i);

struct CommuteReport {
  bool injection_equal = false;
  bool quotient_equal = false;
  bool holds() const { return injection_equal && quotient_equal; }
};

// Procedure (1): symmetrize with respect to psi, then dualize through the
// pairing. Procedure (2): dualize, then symmetrize psi* directly. Compares
// both the injection Sym^i P* -> Sym^i N* and the quotient map.
CommuteReport check_commute(const LinearSES& ses, int i);

// Procedure (1) pieces, exposed for tests.
QMatrix dualized_sym_injection(const LinearSES& ses, int i);
QMatrix dualized_sym_quotient(const LinearSES& ses, int i);

}  // namespace veronormal::symlin
