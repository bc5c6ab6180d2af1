#include "dol/spectrum.hpp"

#include <cmath>
#include <limits>

#include "dol/csv.hpp"
#include "dol/hamiltonian.hpp"

namespace dol {

namespace {

double epsilon_formula(double q) {
  return std::pow(q, -1.5) * (q - 1.0) * (std::pow(q, 6) + 1.0) /
         ((q + 1.0) * (std::pow(q, 3) + 1.0));
}

double coefficient_ratio(int n, double q) {
  const QuadCoefficients c = abcd(n, q, HamiltonianForm::Hermitian);
  return (c.A + c.B) / (c.C + c.D);
}

double exp_or_zero(double lv) {
  if (lv < -745.0) return 0.0;
  if (lv > 708.0) throw OutOfRange("energy: value outside double range");
  return std::exp(lv);
}

}  // namespace

CaseAResult r_and_epsilon_caseA(double q) {
  if (q <= 0.0) throw NonPositiveParameter("r_and_epsilon_caseA: q must be positive");
  if (std::abs(q - 1.0) < DeformationParams::limit_eps)
    return CaseAResult{std::numeric_limits<double>::infinity(), 0.0, true};
  const double eps = epsilon_formula(q);
  for (int n : {0, 7}) {
    if (std::abs(coefficient_ratio(n, q) - eps) > 1e-12 * std::max(1.0, std::abs(eps)))
      throw Error("r_and_epsilon_caseA: coefficient-ratio cross-check failed");
  }
  return CaseAResult{1.0 / eps, eps, false};
}

CaseBRoots caseB_roots(double q) {
  const CaseAResult a = r_and_epsilon_caseA(q);
  if (a.at_limit || !(std::abs(a.r) > 1.0))
    throw OutsideAdmissibleRegion("caseB_roots: |r_q| must exceed 1");
  const double r = a.r;
  const double s = std::sqrt((r - 1.0) * (r + 1.0));
  CaseBRoots roots;
  if (r > 1.0) {
    roots.plus = r + s;
    roots.minus = 1.0 / roots.plus;
  } else {
    roots.minus = r - s;
    roots.plus = 1.0 / roots.minus;
  }
  return roots;
}

double epsilon_caseB(double q, CaseBSign sign) {
  const CaseBRoots roots = caseB_roots(q);
  const double v = (sign == CaseBSign::Plus) ? roots.plus : roots.minus;
  if (!(std::abs(v) < 1.0))
    throw OutsideAdmissibleRegion("epsilon_caseB: requested branch is not in (-1, 1) here");
  return v;
}

VW vw_coefficients(double q, double eps) {
  if (q <= 0.0) throw NonPositiveParameter("vw_coefficients: q must be positive");
  const double sq = std::sqrt(q);
  const double w_plus = sq + 1.0 / sq;
  const double w_minus = sq - 1.0 / sq;
  VW vw;
  vw.V = std::pow(q, -1.5) * w_plus - eps * std::pow(q, 3) * w_minus;
  vw.W = std::pow(q, 1.5) * w_plus - eps * std::pow(q, -3) * w_minus;
  return vw;
}

double branch_epsilon(double q, SpectrumBranch branch) {
  const CaseAResult a = r_and_epsilon_caseA(q);
  if (a.at_limit) return 0.0;
  switch (branch) {
    case SpectrumBranch::CaseA:
      if (!(std::abs(a.epsilon) < 1.0))
        throw OutsideAdmissibleRegion("branch_epsilon: |eps_q| >= 1 at this q");
      return a.epsilon;
    case SpectrumBranch::CaseBPlus:
      return epsilon_caseB(q, CaseBSign::Plus);
    case SpectrumBranch::CaseBMinus:
      return epsilon_caseB(q, CaseBSign::Minus);
  }
  throw InvalidArgument("unknown branch");
}

bool is_admissible(double q, SpectrumBranch branch) {
  if (!(q > 0.0)) return false;
  try {
    branch_epsilon(q, branch);
    return true;
  } catch (const OutsideAdmissibleRegion&) {
    return false;
  }
}

double energy(int n, double q, SpectrumBranch branch, TermFilter filter) {
  if (n < 0) throw InvalidArgument("energy: n must be nonnegative");
  if (q <= 0.0) throw NonPositiveParameter("energy: q must be positive");
  if (std::abs(q - 1.0) < DeformationParams::limit_eps) {
    switch (filter) {
      case TermFilter::Full:
        return n + 0.5;
      case TermFilter::E1Only:
        return 0.5 * n;
      case TermFilter::E2Only:
        return 0.5 * (n + 1);
    }
  }
  const double eps = branch_epsilon(q, branch);
  const VW vw = vw_coefficients(q, eps);
  const double L = std::log(q);
  const double scale3n = 3.0 * n * L;

  auto term = [&](int k) {
    if (k == 0) return 0.0;
    const double lphi = log_phi_q(k, q);
    if (std::abs(scale3n) <= 300.0 && std::abs(lphi) <= 300.0)
      return std::pow(q, 3 * n) * phi_q(k, q);
    return exp_or_zero(scale3n + lphi);
  };

  double e = 0.0;
  if (filter != TermFilter::E2Only) e += 0.25 * vw.V * term(n);
  if (filter != TermFilter::E1Only) e += 0.25 * vw.W * term(n + 1);
  return e;
}

AdmissibleInterval admissible_interval(SpectrumBranch /*branch*/, double tol) {
  // Both case families share the same boundary roots (|eps_q| = 1 iff |r_q| = 1).
  auto f = [](double q) { return std::abs(epsilon_formula(q)) - 1.0; };
  auto bisect = [&](double lo, double hi) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo * fhi > 0.0) throw BracketFailure("admissible_interval: no sign change in bracket");
    for (int it = 0; it < 200 && (hi - lo) > tol; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = f(mid);
      if (fm == 0.0) return mid;
      if (flo * fm < 0.0) {
        hi = mid;
        fhi = fm;
      } else {
        lo = mid;
        flo = fm;
      }
    }
    return 0.5 * (lo + hi);
  };
  return AdmissibleInterval{bisect(0.01, 1.0), bisect(1.0, 10.0)};
}

SpectrumTable spectrum_table(double q, SpectrumBranch branch, int nmax) {
  if (nmax < 0 || nmax > 512) throw InvalidArgument("spectrum_table: nmax must be <= 512");
  SpectrumTable t;
  t.q = q;
  t.branch = branch;
  t.kappa = 1.0;
  t.rows.reserve(static_cast<size_t>(nmax) + 1);
  const bool unit = std::abs(q - 1.0) < DeformationParams::limit_eps;
  for (int n = 0; n <= nmax; ++n) {
    SpectrumRow row;
    row.n = n;
    row.phi_n = unit ? n : phi_q(n, q);
    row.phi_n1 = unit ? n + 1 : phi_q(n + 1, q);
    row.energy = energy(n, q, branch);
    t.rows.push_back(row);
  }
  for (int n = 1; n + 1 <= nmax; ++n) {
    const double d_prev = t.rows[n].energy - t.rows[n - 1].energy;
    const double d_next = t.rows[n + 1].energy - t.rows[n].energy;
    if (d_prev * d_next < 0.0) t.turning_points.push_back(n);
  }
  return t;
}

std::string SpectrumTable::to_csv() const {
  std::vector<std::vector<std::string>> rows_out;
  rows_out.reserve(rows.size());
  for (const auto& r : rows) {
    rows_out.push_back({std::to_string(r.n), csv::format_sci(r.phi_n), csv::format_sci(r.phi_n1),
                        csv::format_sci(r.energy)});
  }
  return csv::table({"n", "phi_n", "phi_n_plus_1", "energy"}, rows_out);
}

std::string branch_name(SpectrumBranch branch) {
  switch (branch) {
    case SpectrumBranch::CaseA:
      return "caseA";
    case SpectrumBranch::CaseBPlus:
      return "caseBplus";
    case SpectrumBranch::CaseBMinus:
      return "caseBminus";
  }
  return "unknown";
}

bool parse_branch(const std::string& name, SpectrumBranch& out) {
  if (name == "caseA") {
    out = SpectrumBranch::CaseA;
    return true;
  }
  if (name == "caseBplus") {
    out = SpectrumBranch::CaseBPlus;
    return true;
  }
  if (name == "caseBminus") {
    out = SpectrumBranch::CaseBMinus;
    return true;
  }
  return false;
}

}  // namespace dol
