#include "dol/structure.hpp"

#include <cmath>
#include <limits>

namespace dol {

namespace {

// Direct power evaluation is used while |k ln q| stays below this; beyond it
// the closed forms are assembled in log space.
constexpr double kDirectLimit = 300.0;
// |log value| beyond which the result is not representable as a double.
constexpr double kRepresentable = 708.0;

double softplus(double x) {
  if (x > 36.0) return x + std::log1p(std::exp(-x));
  if (x < -36.0) return std::exp(x);
  return std::log1p(std::exp(x));
}

double logaddexp(double a, double b) {
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

// log of |e^x - 1|.
double log_em1(double x) {
  if (x > 36.0) return x;
  return std::log(std::abs(std::expm1(x)));
}

// log [n]_q with L = ln q != 0; numerator and denominator carry the same sign.
double log_qbracket(int n, double L) { return log_em1(n * L) - log_em1(L); }

// log [m]_{q,p} for q != p; symmetric under swap.
double log_qp_number(int m, double q, double p) {
  const double a = std::max(q, p);
  const double b = std::min(q, p);
  const double la = std::log(a);
  const double lb = std::log(b);
  return m * la + std::log1p(-std::exp(m * (lb - la))) - std::log(a - b);
}

double checked_exp(double lv, const char* what) {
  if (!(std::abs(lv) <= kRepresentable))
    throw OutOfRange(std::string(what) + ": value outside double range");
  return std::exp(lv);
}

}  // namespace

DeformationParams::DeformationParams(double q_, double p_) : q(q_), p(p_), Q(q_ / p_) {
  if (!(q > 0.0) || !(p > 0.0))
    throw NonPositiveParameter("deformation parameters must be positive");
}

bool DeformationParams::q_is_unit() const { return std::abs(q - 1.0) < limit_eps; }

bool DeformationParams::Q_is_unit() const {
  return std::abs(Q - 1.0) < limit_eps * std::max(Q, 1.0);
}

bool operator==(const DeformationParams& a, const DeformationParams& b) {
  return a.q == b.q && a.p == b.p;
}

double qp_number(int m, double q, double p) {
  if (m < 0) throw InvalidArgument("qp_number: m must be nonnegative");
  if (m == 0) return 0.0;
  if (std::abs(q - p) < DeformationParams::limit_eps * std::max(std::abs(q), std::abs(p)))
    return m * std::pow(q, m - 1);
  // p^m ((q/p)^m - 1)/(q - p), with the difference taken through expm1 so
  // that nearly equal parameters keep full precision.
  const double d = (q - p) / p;
  return std::pow(p, m) * std::expm1(m * std::log1p(d)) / (q - p);
}

double arik_coon_bracket(int n, double q) {
  if (q <= 0.0) throw NonPositiveParameter("arik_coon_bracket: q must be positive");
  if (n < 0) throw InvalidArgument("arik_coon_bracket: n must be nonnegative");
  if (n == 0) return 0.0;
  if (std::abs(q - 1.0) < DeformationParams::limit_eps) return n;
  const double L = std::log(q);
  if (n * std::abs(L) <= 2.0 * kDirectLimit) return std::expm1(n * L) / std::expm1(L);
  return checked_exp(log_qbracket(n, L), "arik_coon_bracket");
}

double log_arik_coon_bracket(int n, double q) {
  if (q <= 0.0) throw NonPositiveParameter("arik_coon_bracket: q must be positive");
  if (n < 0) throw InvalidArgument("arik_coon_bracket: n must be nonnegative");
  if (n == 0) return -std::numeric_limits<double>::infinity();
  if (std::abs(q - 1.0) < DeformationParams::limit_eps) return std::log(double(n));
  return log_qbracket(n, std::log(q));
}

double phi_q(int n, double q) {
  if (q <= 0.0) throw NonPositiveParameter("phi_q: q must be positive");
  if (n < 0) throw InvalidArgument("phi_q: n must be nonnegative");
  if (n == 0) return 0.0;
  if (std::abs(q - 1.0) < DeformationParams::limit_eps) return n;
  const double L = std::log(q);
  if (n * std::abs(L) <= kDirectLimit) {
    const double bracket = std::expm1(n * L) / std::expm1(L);
    const double num = 2.0 * std::pow(q, -n) * bracket * (1.0 + std::pow(q, 1 - n));
    const double den = (1.0 + std::pow(q, 2 * n - 2)) * (1.0 + std::pow(q, 2 * n));
    return num / den;
  }
  return checked_exp(log_phi_q(n, q), "phi_q");
}

double log_phi_q(int n, double q) {
  if (q <= 0.0) throw NonPositiveParameter("phi_q: q must be positive");
  if (n < 0) throw InvalidArgument("phi_q: n must be nonnegative");
  if (n == 0) return -std::numeric_limits<double>::infinity();
  if (std::abs(q - 1.0) < DeformationParams::limit_eps) return std::log(double(n));
  const double L = std::log(q);
  return std::log(2.0) - n * L + log_qbracket(n, L) + softplus((1.0 - n) * L) -
         softplus((2.0 * n - 2.0) * L) - softplus(2.0 * n * L);
}

double phi_pq(int n, double q, double p) {
  if (q <= 0.0 || p <= 0.0) throw NonPositiveParameter("phi_pq: q, p must be positive");
  if (n < 0) throw InvalidArgument("phi_pq: n must be nonnegative");
  if (n == 0) return 0.0;
  const double Q = q / p;
  if (std::abs(Q - 1.0) < DeformationParams::limit_eps * std::max(Q, 1.0)) return n / p;
  const double m = std::max(std::abs(std::log(q)), std::abs(std::log(p)));
  if (5.0 * n * m <= kDirectLimit) {
    const double bracket = 1.0 + qp_number(2 * n - 1, q, p) / std::pow(q * p, n - 1);
    const double num = 2.0 * std::pow(q, -n) * std::pow(p, 5 * n - 3) * bracket;
    const double den = (std::pow(q, 2 * n - 2) + std::pow(p, 2 * n - 2)) *
                       (std::pow(q, 2 * n) + std::pow(p, 2 * n));
    return num / den;
  }
  return checked_exp(log_phi_pq(n, q, p), "phi_pq");
}

double log_phi_pq(int n, double q, double p) {
  if (q <= 0.0 || p <= 0.0) throw NonPositiveParameter("phi_pq: q, p must be positive");
  if (n < 0) throw InvalidArgument("phi_pq: n must be nonnegative");
  if (n == 0) return -std::numeric_limits<double>::infinity();
  const double Q = q / p;
  if (std::abs(Q - 1.0) < DeformationParams::limit_eps * std::max(Q, 1.0))
    return std::log(double(n) / p);
  const double lq = std::log(q);
  const double lp = std::log(p);
  const double t = log_qp_number(2 * n - 1, q, p) - (n - 1) * (lq + lp);
  return std::log(2.0) - n * lq + (5.0 * n - 3.0) * lp + softplus(t) -
         logaddexp((2.0 * n - 2.0) * lq, (2.0 * n - 2.0) * lp) -
         logaddexp(2.0 * n * lq, 2.0 * n * lp);
}

HGPair hg_functions(int n, double q) {
  if (q <= 0.0) throw NonPositiveParameter("hg_functions: q must be positive");
  HGPair r;
  r.H = 0.5 * std::pow(q, 2 * n + 1) * (1.0 + std::pow(q, 2 * n + 2));
  r.G = 0.5 * std::pow(q, 2 * n) * (1.0 + std::pow(q, 2 * n - 2));
  return r;
}

HGPair hg_functions_pq(int n, const DeformationParams& params) {
  const double Q = params.Q;
  HGPair r;
  r.H = 0.5 * params.p * std::pow(Q, 2 * n + 1) * (1.0 + std::pow(Q, 2 * n + 2));
  r.G = 0.5 * params.p * std::pow(Q, 2 * n) * (1.0 + std::pow(Q, 2 * n - 2));
  return r;
}

HGPair hg_functions_pq_log(int n, const DeformationParams& params) {
  const double lQ = std::log(params.Q);
  HGPair r;
  r.H = std::log(0.5 * params.p) + (2.0 * n + 1.0) * lQ + softplus((2.0 * n + 2.0) * lQ);
  r.G = std::log(0.5 * params.p) + 2.0 * n * lQ + softplus((2.0 * n - 2.0) * lQ);
  return r;
}

double hg_identity_residual(const DeformationParams& params, int nmax) {
  const double lQ = std::log(params.Q);
  double worst = 0.0;
  for (int n = 0; n <= nmax; ++n) {
    double t1;
    double t2;
    if ((4.0 * n + 4.0) * std::abs(lQ) <= 600.0) {
      const HGPair hg = hg_functions_pq(n, params);
      t1 = hg.H * phi_pq(n + 1, params.q, params.p);
      t2 = hg.G * phi_pq(n, params.q, params.p);
    } else {
      // The factors leave double range individually while their products stay
      // O(1); combine the exponents first.
      const HGPair lg = hg_functions_pq_log(n, params);
      t1 = std::exp(lg.H + log_phi_pq(n + 1, params.q, params.p));
      t2 = (n == 0) ? 0.0 : std::exp(lg.G + log_phi_pq(n, params.q, params.p));
    }
    worst = std::max(worst, std::abs(t1 - t2 - 1.0));
  }
  return worst;
}

StructureFunction::StructureFunction(SfKind kind, DeformationParams params)
    : kind_(kind), params_(params) {}

StructureFunction StructureFunction::arik_coon(double q) {
  StructureFunction sf(SfKind::ArikCoon, DeformationParams(q));
  sf.check_positivity();
  return sf;
}

StructureFunction StructureFunction::nonstandard_q(double q) {
  StructureFunction sf(SfKind::NonstandardQ, DeformationParams(q));
  sf.check_positivity();
  return sf;
}

StructureFunction StructureFunction::nonstandard_pq(double q, double p) {
  StructureFunction sf(SfKind::NonstandardPQ, DeformationParams(q, p));
  sf.check_positivity();
  return sf;
}

StructureFunction StructureFunction::scaled(const StructureFunction& base, double kappa) {
  if (!(kappa > 0.0)) throw NonPositiveParameter("scaled: kappa must be positive");
  StructureFunction sf(SfKind::Scaled, base.params_);
  sf.kappa_ = kappa;
  sf.base_ = std::make_shared<const StructureFunction>(base);
  return sf;
}

double StructureFunction::phi(int n) const {
  switch (kind_) {
    case SfKind::ArikCoon:
      return arik_coon_bracket(n, params_.q);
    case SfKind::NonstandardQ:
      return phi_q(n, params_.q);
    case SfKind::NonstandardPQ:
      return phi_pq(n, params_.q, params_.p);
    case SfKind::Scaled:
      return kappa_ * base_->phi(n);
  }
  throw InvalidArgument("unknown structure function kind");
}

double StructureFunction::log_phi(int n) const {
  switch (kind_) {
    case SfKind::ArikCoon:
      return log_arik_coon_bracket(n, params_.q);
    case SfKind::NonstandardQ:
      return log_phi_q(n, params_.q);
    case SfKind::NonstandardPQ:
      return log_phi_pq(n, params_.q, params_.p);
    case SfKind::Scaled:
      return std::log(kappa_) + base_->log_phi(n);
  }
  throw InvalidArgument("unknown structure function kind");
}

bool StructureFunction::same_as(const StructureFunction& o) const {
  if (kind_ != o.kind_ || !(params_ == o.params_) || kappa_ != o.kappa_) return false;
  if (kind_ == SfKind::Scaled) return base_->same_as(*o.base_);
  return true;
}

void StructureFunction::check_positivity() const {
  for (int n = 1; n <= positivity_horizon; ++n) {
    const double lv = log_phi(n);
    if (std::isnan(lv))
      throw NegativeStructureValue("structure function not positive over the horizon");
  }
}

double phi_factorial(int n, const StructureFunction& sf) {
  if (n < 0) throw InvalidArgument("phi_factorial: n must be nonnegative");
  double r = 1.0;
  for (int k = 1; k <= n; ++k) r *= sf.phi(k);
  return r;
}

}  // namespace dol
