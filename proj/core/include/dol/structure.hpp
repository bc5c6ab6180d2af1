#pragma once

#include <memory>

#include "dol/errors.hpp"

namespace dol {

/// Deformation parameters q, p with the derived ratio Q = q/p. p defaults
/// to 1 (single-parameter algebra). Both must be positive; q = p is reachable
/// only through the limit branches of the evaluation routines.
struct DeformationParams {
  double q;
  double p;
  double Q;  // q/p, cached

  explicit DeformationParams(double q_, double p_ = 1.0);

  bool q_is_unit() const;   // |q - 1| below the limit threshold
  bool Q_is_unit() const;   // |Q - 1| below the limit threshold

  static constexpr double limit_eps = 1e-9;
};

bool operator==(const DeformationParams& a, const DeformationParams& b);

/// (q,p)-number [m] = (q^m - p^m)/(q - p); limit branch m q^{m-1} at q = p.
double qp_number(int m, double q, double p);

/// Nonstandard one-parameter structure function. Limit branch returns n at q = 1.
double phi_q(int n, double q);
double log_phi_q(int n, double q);  // n >= 1; -inf at n = 0

/// Nonstandard two-parameter structure function (asymmetric under q <-> p).
double phi_pq(int n, double q, double p);
double log_phi_pq(int n, double q, double p);

/// Arik-Coon bracket [n]_q = (1 - q^n)/(1 - q).
double arik_coon_bracket(int n, double q);
double log_arik_coon_bracket(int n, double q);

struct HGPair {
  double H;
  double G;
};

/// Operator-function pair of the single-parameter oscillator relation
/// H(N) a-a+ - G(N) a+a- = 1: H(n) = q^{2n+1}(1+q^{2n+2})/2,
/// G(n) = q^{2n}(1+q^{2n-2})/2 = q^3 H(n-2).
HGPair hg_functions(int n, double q);

/// Two-parameter generalization carrying the overall p factor, so that
/// H(n) phi_pq(n+1) - G(n) phi_pq(n) = 1 holds for p != 1 as well.
HGPair hg_functions_pq(int n, const DeformationParams& params);

/// Logarithms of the pair above, for exponents outside double range.
HGPair hg_functions_pq_log(int n, const DeformationParams& params);

/// max_{n <= nmax} |H(n) Phi(n+1) - G(n) Phi(n) - 1|, evaluated through
/// combined exponents once the individual factors leave double range.
double hg_identity_residual(const DeformationParams& params, int nmax);

enum class SfKind { ArikCoon, NonstandardQ, NonstandardPQ, Scaled };

/// A named structure function n -> Phi(n) with Phi(0) = 0. Construction
/// checks positivity of Phi(n) for 1 <= n <= positivity_horizon in log space
/// (values themselves may be far outside double range at that horizon).
class StructureFunction {
 public:
  static constexpr int positivity_horizon = 512;

  static StructureFunction arik_coon(double q);
  static StructureFunction nonstandard_q(double q);
  static StructureFunction nonstandard_pq(double q, double p);
  static StructureFunction scaled(const StructureFunction& base, double kappa);

  double phi(int n) const;
  double log_phi(int n) const;

  SfKind kind() const { return kind_; }
  const DeformationParams& params() const { return params_; }
  double kappa() const { return kappa_; }

  bool same_as(const StructureFunction& o) const;

 private:
  StructureFunction(SfKind kind, DeformationParams params);

  SfKind kind_;
  DeformationParams params_;
  double kappa_ = 1.0;
  std::shared_ptr<const StructureFunction> base_;  // Scaled only

  void check_positivity() const;
};

/// Phi(n)! = Phi(n) Phi(n-1) ... Phi(1); 1 for n = 0.
double phi_factorial(int n, const StructureFunction& sf);

}  // namespace dol
