#pragma once

#include <string>
#include <vector>

#include "dol/hamiltonian.hpp"

namespace dol {

/// Data of a generalized nonlinear Bogoliubov transformation mapping a
/// Phi-oscillator onto a chi-oscillator with mixing parameter epsilon.
/// epsilon = 0 is accepted for the construction routines (diagonal
/// transformation) but rejected by the constraint and spectrum paths.
class GnbtSpec {
 public:
  /// chi(n) = kappa * Phi(n); zeta is the constant kappa^{-1/2}.
  static GnbtSpec canonical(const StructureFunction& phi, double epsilon, double kappa = 1.0);
  static GnbtSpec general(const StructureFunction& phi, const StructureFunction& chi,
                          double epsilon);

  double epsilon() const { return epsilon_; }
  double kappa() const { return kappa_; }
  bool is_canonical() const { return canonical_; }
  const StructureFunction& source() const { return phi_; }
  const StructureFunction& target() const { return chi_; }

  /// zeta(n) = sqrt(Phi(n)/chi(n)) for n >= 1, evaluated through the log
  /// ratio. Both structure functions vanish at n = 0; zeta(0) is defined as
  /// zeta(1), which is exact in the canonical case and only ever multiplies
  /// vanishing matrix elements elsewhere.
  double zeta(int n) const;
  double zeta_inv(int n) const;

 private:
  GnbtSpec(StructureFunction phi, StructureFunction chi, double epsilon, double kappa,
           bool canonical);

  StructureFunction phi_;
  StructureFunction chi_;
  double epsilon_;
  double kappa_;
  bool canonical_;
};

struct COps {
  DenseOp c_minus;
  DenseOp c_plus;
};

/// c- = (eps zeta^{-1}(N) a+ + zeta^{-1}(N+1) a-)/sqrt(1-eps^2) and its exact
/// adjoint c+. The c- raising (c+ lowering) amplitudes are computed as eps
/// times the partner entry so the inverse transformation cancels them exactly.
COps build_c_ops(const FockRep& rep, const GnbtSpec& spec);

struct LadderPairC {
  DenseOp a_minus;
  DenseOp a_plus;
};

/// a- = zeta(N+1)(c- - eps c+)/sqrt(1-eps^2), a+ = zeta(N)(c+ - eps c-)/sqrt(1-eps^2).
LadderPairC invert_gnbt(const DenseOp& c_minus, const DenseOp& c_plus, const GnbtSpec& spec);

struct GnbtG {
  double g1;
  double g2;
};

/// General transformation coefficients
///   g1(n) = eps sqrt(chi(n)/((1-eps^2) Phi(n))), n >= 1,
///   g2(n) = sqrt(chi(n+1)/((1-eps^2) Phi(n+1))).
GnbtG gnbt_coefficients(int n, const GnbtSpec& spec);

struct RstuCoefficients {
  double R;
  double S;
  double T;
  double U;
};

/// R = A zeta(n) - eps D zeta(n+1),  S = eps B zeta(n+1) - C zeta(n),
/// T = eps A zeta(n) - D zeta(n+1),  U = B zeta(n+1) - eps C zeta(n),
/// with (A,B,C,D) the Hermitian-form coefficients at (n, q).
RstuCoefficients rstu(int n, double q, const GnbtSpec& spec);

/// The Hermitian Hamiltonian re-expressed through the quasi-particle
/// operators; equals build_h_hermitian on the full truncated space.
DenseOp transformed_hamiltonian(const FockRep& rep, double q, const GnbtSpec& spec);

/// Diagonal of the quasi-free Hamiltonian -(S(N) chi(N) + T(N) chi(N+1))/sqrt(kappa).
/// Canonical specs only.
DiagonalOp quasi_free_hamiltonian(double q, const GnbtSpec& spec, int nmax);

struct ConstraintRow {
  int n;
  double g1;  // x(n+1) R(n+1) + eps S(n+1)
  double g2;  // R(n-1) + eps y(n-1) S(n-1)
  double g3;  // eps (U(n+1) + eps x(n+1) T(n+1))
  double g4;  // eps T(n-1) + y(n-1) U(n-1)
};

/// Scalar diagonalization-constraint combinations per Fock level, reported as
/// diagnostics and never asserted zero: for any constant epsilon the two
/// underlying quadratics cannot vanish simultaneously (their difference is
/// (eps^2-1)(A-B), nonzero away from q = 1). In the canonical case the rows
/// are computed from the kappa-free cores, so tables at different kappa are
/// bit-identical. offdiag_residual measures the c+..c+ / c-..c- sector of the
/// transformed Hamiltonian; bilinear_offdiag measures the off-diagonal part
/// of c+c- - chi(N), which the commutator relation does not force to vanish.
struct ConstraintTable {
  double q;
  double epsilon;
  double kappa;
  std::vector<ConstraintRow> rows;
  double offdiag_residual;
  double bilinear_offdiag;

  std::string to_csv() const;
};

ConstraintTable constraint_residuals(double q, const GnbtSpec& spec, int horizon, int dim = 32);

}  // namespace dol
