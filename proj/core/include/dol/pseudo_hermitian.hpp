#pragma once

#include <functional>

#include "dol/heisenberg.hpp"

namespace dol {

enum class EtaKind { X, P, H, Tilde };

/// Positive diagonal factor eta(N) = Q^{e(N)} implementing pseudo-Hermitian
/// conjugation O^dag = eta^{-1} O eta. Exponents are quarter-integers kept in
/// exact integer arithmetic; values are exponentiated only where needed, so
/// ratios eta(j)/eta(i) stay representable even when eta itself is not.
///   eta_X(n) = Q^{n(n+3)/2}, eta_P(n) = Q^{n(3-n)/2},
///   eta_H(n) = Q^{3n},       eta_tilde(n) = Q^{3n/2}.
class EtaFactor {
 public:
  EtaFactor(EtaKind kind, DeformationParams params);

  EtaKind kind() const { return kind_; }
  const DeformationParams& params() const { return params_; }

  /// Exponent of Q in units of 1/4.
  long long exponent_quarters(int n) const;
  double log_value(int n) const;
  double value(int n) const;  // OutOfRange when not representable
  DiagonalOp to_diagonal(int dim) const;

 private:
  EtaKind kind_;
  DeformationParams params_;
};

/// Q^{-f(N)} op Q^{f(N)} where f(n) = quarters(n)/4. Computed entrywise via
/// exponent differences, which stay O(dim) for banded operators.
DenseOp conjugate_by_q_power(const DenseOp& op, double Q,
                             const std::function<long long(int)>& quarters);

/// eta^{-1}(N) op eta(N).
DenseOp eta_conjugate(const DenseOp& op, const EtaFactor& eta);

/// Scaled interior residual of adjoint(op) - eta^{-1} op eta.
double pseudo_adjoint_residual(const DenseOp& op, const EtaFactor& eta, int ladder_degree);

/// Max over n < horizon of the relative violation of the defining recurrences
///   eta_X(n+1) = eta_X(n) Q^{n+2},   eta_P(n+1) = eta_P(n) Q^{-n+1},
///   eta_H(n+1) = eta_H(n) Q^3,       eta_tilde(n+1) = eta_tilde(n) Q^{3/2},
/// evaluated against the closed forms in log space.
double eta_recurrence_check(EtaKind kind, const DeformationParams& params, int horizon);

struct TildePair {
  DenseOp x_tilde;  // Q^{-N^2/4} X Q^{N^2/4}
  DenseOp p_tilde;  // Q^{N^2/4} P Q^{-N^2/4}
};

/// Conjugated pair for which both members are eta-pseudo-Hermitian with the
/// single factor eta_tilde(N) = Q^{3N/2}.
TildePair tilde_operators(const XPPair& pair);

}  // namespace dol
