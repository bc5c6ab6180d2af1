#include "dol/pseudo_hermitian.hpp"

#include <algorithm>
#include <cmath>

#include "dol/errors.hpp"

namespace dol {

EtaFactor::EtaFactor(EtaKind kind, DeformationParams params) : kind_(kind), params_(params) {}

long long EtaFactor::exponent_quarters(int n) const {
  const long long m = n;
  switch (kind_) {
    case EtaKind::X:
      return 2 * m * (m + 3);
    case EtaKind::P:
      return 2 * m * (3 - m);
    case EtaKind::H:
      return 12 * m;
    case EtaKind::Tilde:
      return 6 * m;
  }
  throw InvalidArgument("unknown eta kind");
}

double EtaFactor::log_value(int n) const {
  return 0.25 * static_cast<double>(exponent_quarters(n)) * std::log(params_.Q);
}

double EtaFactor::value(int n) const {
  const double lv = log_value(n);
  if (!(std::abs(lv) <= 708.0)) throw OutOfRange("eta factor outside double range");
  return std::exp(lv);
}

DiagonalOp EtaFactor::to_diagonal(int dim) const {
  return DiagonalOp::of(dim, [this](int n) { return value(n); });
}

DenseOp conjugate_by_q_power(const DenseOp& op, double Q,
                             const std::function<long long(int)>& quarters) {
  const double L = std::log(Q);
  DenseOp r(op.dim());
  for (int i = 0; i < op.dim(); ++i) {
    for (int j = 0; j < op.dim(); ++j) {
      const complex v = op(i, j);
      if (v == complex(0.0, 0.0)) continue;
      const double e = 0.25 * static_cast<double>(quarters(j) - quarters(i)) * L;
      r(i, j) = v * std::exp(e);
    }
  }
  return r;
}

DenseOp eta_conjugate(const DenseOp& op, const EtaFactor& eta) {
  return conjugate_by_q_power(op, eta.params().Q,
                              [&eta](int n) { return eta.exponent_quarters(n); });
}

double pseudo_adjoint_residual(const DenseOp& op, const EtaFactor& eta, int ladder_degree) {
  const DenseOp delta = op.adjoint() - eta_conjugate(op, eta);
  return scaled_interior_residual(delta, ladder_degree, op.max_abs());
}

double eta_recurrence_check(EtaKind kind, const DeformationParams& params, int horizon) {
  if (horizon > 512) throw InvalidArgument("eta_recurrence_check: horizon must be <= 512");
  const EtaFactor eta(kind, params);
  const double L = std::log(params.Q);
  double worst = 0.0;
  for (int n = 0; n < horizon; ++n) {
    long long step4 = 0;  // recurrence exponent in quarter units
    switch (kind) {
      case EtaKind::X:
        step4 = 4LL * (n + 2);
        break;
      case EtaKind::P:
        step4 = 4LL * (1 - n);
        break;
      case EtaKind::H:
        step4 = 12;
        break;
      case EtaKind::Tilde:
        step4 = 6;
        break;
    }
    const long long gap = eta.exponent_quarters(n + 1) - eta.exponent_quarters(n) - step4;
    worst = std::max(worst, std::abs(std::expm1(0.25 * static_cast<double>(gap) * L)));
  }
  return worst;
}

TildePair tilde_operators(const XPPair& pair) {
  const double Q = pair.params.Q;
  auto n_sq = [](int n) { return static_cast<long long>(n) * n; };
  auto minus_n_sq = [](int n) { return -static_cast<long long>(n) * n; };
  return TildePair{conjugate_by_q_power(pair.X, Q, n_sq),
                   conjugate_by_q_power(pair.P, Q, minus_n_sq)};
}

}  // namespace dol
