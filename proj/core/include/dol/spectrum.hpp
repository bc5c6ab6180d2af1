#pragma once

#include <string>
#include <vector>

#include "dol/structure.hpp"

namespace dol {

/// Quasi-particle energy branches. CaseA fixes the mixing parameter as the
/// coefficient ratio eps_q = (A+B)/(C+D); the CaseB branches are the roots of
/// the quadratic e^2 - 2 r_q e + 1 = 0 with r_q = 1/eps_q, each real and
/// inside (-1,1) on one side of q = 1 only.
enum class SpectrumBranch { CaseA, CaseBPlus, CaseBMinus };

/// Optional single-term restriction of the energy formula (CaseA split).
enum class TermFilter { Full, E1Only, E2Only };

struct CaseAResult {
  double r;        // 1/epsilon; +inf flagged at the q -> 1 limit
  double epsilon;  // q^{-3/2}(q-1)(q^6+1) / ((q+1)(q^3+1))
  bool at_limit;   // |q - 1| below the limit threshold
};

/// Also cross-checks epsilon against the coefficient ratio (A+B)/(C+D) at
/// n = 0 and n = 7 (the q^{3n} factor cancels, so the ratio is n-independent).
CaseAResult r_and_epsilon_caseA(double q);

enum class CaseBSign { Plus, Minus };

/// Root r_q +/- sqrt(r_q^2 - 1), valid (real and inside (-1,1)) only where the
/// requested sign admits it; throws OutsideAdmissibleRegion otherwise.
double epsilon_caseB(double q, CaseBSign sign);

/// Both algebraic roots regardless of the (-1,1) window, computed in the
/// cancellation-free form (one root as the reciprocal of the other). Requires
/// |r_q| > 1.
struct CaseBRoots {
  double plus;
  double minus;
};
CaseBRoots caseB_roots(double q);

struct VW {
  double V;  // q^{-3/2}(q^{1/2}+q^{-1/2}) - eps q^3 (q^{1/2}-q^{-1/2})
  double W;  // q^{3/2}(q^{1/2}+q^{-1/2}) - eps q^{-3}(q^{1/2}-q^{-1/2})
};

VW vw_coefficients(double q, double eps);

/// Mixing parameter of a branch at q; OutsideAdmissibleRegion when invalid.
/// Returns 0 in the q -> 1 limit (all branches degenerate there).
double branch_epsilon(double q, SpectrumBranch branch);

bool is_admissible(double q, SpectrumBranch branch);

/// E_n = q^{3n}/4 (V Phi(n) + W Phi(n+1)); limit branch gives exactly n + 1/2.
/// The q^{3n} Phi products are combined in log space when they leave the
/// directly representable range.
double energy(int n, double q, SpectrumBranch branch, TermFilter filter = TermFilter::Full);

struct AdmissibleInterval {
  double q_low;
  double q_high;
};

/// Bracketed bisection for |eps_q| = 1 on (0.01, 1) and (1, 10); the CaseB
/// condition |r_q| = 1 has the same roots. Absolute tolerance on q.
AdmissibleInterval admissible_interval(SpectrumBranch branch, double tol = 1e-9);

struct SpectrumRow {
  int n;
  double phi_n;
  double phi_n1;
  double energy;
};

struct SpectrumTable {
  double q;
  SpectrumBranch branch;
  double kappa;
  std::vector<SpectrumRow> rows;
  /// Indices where the first difference of E changes sign (non-monotonicity
  /// markers; empty for monotone spectra).
  std::vector<int> turning_points;

  std::string to_csv() const;
};

SpectrumTable spectrum_table(double q, SpectrumBranch branch, int nmax);

std::string branch_name(SpectrumBranch branch);
bool parse_branch(const std::string& name, SpectrumBranch& out);

}  // namespace dol
