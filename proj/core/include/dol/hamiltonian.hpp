#pragma once

#include "dol/pseudo_hermitian.hpp"

namespace dol {

enum class HamiltonianForm { Hermitian, PseudoHermitian };

/// Coefficients of the quadratic Hamiltonian
///   H = A(N) a+a+ + B(N) a-a- + C(N) a+a- + D(N) a-a+.
/// Hermitian form:  A = q^{3n-3} w-/4, B = q^6 A = A(n+2),
///                  C = q^{3n-3/2} w+/4, D = q^3 C = C(n+1),
/// with w± = q^{1/2} ± q^{-1/2}. The pseudo-Hermitian form has A = B
/// (which is exactly what breaks plain Hermiticity) while C and D keep the
/// Hermitian-form values: the diagonal sectors a+a- and a-a+ are invariant
/// under the similarity transforms that distinguish the two constructions.
struct QuadCoefficients {
  double A;
  double B;
  double C;
  double D;
};

QuadCoefficients abcd(int n, double q, HamiltonianForm form);

/// H = (a-a+ + a+a-)/2; diagonal entry n is (Phi(n) + Phi(n+1))/2 on the
/// interior.
DenseOp build_h_number_form(const FockRep& rep);

/// Closed-form diagonal of the number-form Hamiltonian,
///   (1/p) Q^{-2n-1}/(1+Q^{2n+2}) + (1 + Q^{-1}(1+Q^{2n-2})/(1+Q^{2n+2})) Phi(n)/2,
/// evaluated independently of the matrix route.
double number_form_closed_diagonal(int n, const DeformationParams& params,
                                   const StructureFunction& phi);

/// Hermitian Hamiltonian in coefficient form (the rep must use the
/// single-parameter nonstandard structure function at the same q).
DenseOp build_h_hermitian(const FockRep& rep, double q);
/// Same operator assembled through the eta-sandwich of X^2 and P^2.
DenseOp build_h_hermitian_sandwich(const FockRep& rep, double q);

/// eta_H-pseudo-Hermitian Hamiltonian in coefficient form (not Hermitian for
/// q != 1).
DenseOp build_h_pseudo(const FockRep& rep, double q);
DenseOp build_h_pseudo_sandwich(const FockRep& rep, double q);

/// Sandwich constructions on explicit operator matrices. Swapping the two
/// operators and sending q -> 1/q maps one construction onto the other.
DenseOp hermitian_sandwich_from(const DenseOp& x, const DenseOp& p, double Q);
DenseOp pseudo_sandwich_from(const DenseOp& x, const DenseOp& p, double Q);

}  // namespace dol
