#pragma once

#include "dol/fock.hpp"

namespace dol {

/// The N-dependent coefficients realizing X = f(N) a- + g(N) a+ and
/// P = i (k(N) a+ - h(N) a-):  f = k = Q^n / sqrt(2),  h = g = Q^{2n} / sqrt(2).
struct CoefficientQuadruple {
  DeformationParams params;

  double f(int n) const;
  double g(int n) const;
  double h(int n) const;
  double k(int n) const;
};

CoefficientQuadruple solve_coefficients(const DeformationParams& params);

/// Position/momentum pair over a truncated Fock representation. X has purely
/// real entries and P purely imaginary ones; neither is Hermitian for Q != 1.
struct XPPair {
  DenseOp X;
  DenseOp P;
  DeformationParams params;
  FockRep rep;
};

/// X = (Q^{2N} a+ + Q^N a-)/sqrt(2),  P = i (Q^N a+ - Q^{2N} a-)/sqrt(2),
/// with the diagonal factors applied in exactly this operator order.
/// The rep must be built from the matching nonstandard structure function.
XPPair build_xp(const FockRep& rep, const DeformationParams& params);

struct LadderPair {
  DenseOp a_minus;
  DenseOp a_plus;
};

/// a- = d_{N,Q} (Q^{-N} X + i P),  a+ = d_{N,Q} (X - i Q^{-N} P),
/// d_{N,Q} = sqrt(2)/(1 + Q^{2N}); exact algebraic inverse of build_xp.
LadderPair invert_to_ladders(const XPPair& pair);

struct HaResiduals {
  /// Scaled interior residual of the defining commutation relation
  /// p X P - q P X = i (the form that reduces to X P - q P X = i at p = 1).
  double qp_commutator;
  /// max_n |H(n) Phi(n+1) - G(n) Phi(n) - 1| over n <= 200.
  double hg_identity;
};

HaResiduals verify_ha_residuals(const XPPair& pair);

}  // namespace dol
