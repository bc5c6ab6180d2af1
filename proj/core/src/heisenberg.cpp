#include "dol/heisenberg.hpp"

#include <algorithm>
#include <cmath>

#include "dol/errors.hpp"

namespace dol {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const complex kI(0.0, 1.0);

bool structure_matches(const StructureFunction& sf, const DeformationParams& params) {
  if (sf.kind() == SfKind::NonstandardQ) return params.p == 1.0 && sf.params().q == params.q;
  if (sf.kind() == SfKind::NonstandardPQ)
    return sf.params().q == params.q && sf.params().p == params.p;
  return false;
}
}  // namespace

double CoefficientQuadruple::f(int n) const { return std::pow(params.Q, n) * kInvSqrt2; }
double CoefficientQuadruple::g(int n) const { return std::pow(params.Q, 2 * n) * kInvSqrt2; }
double CoefficientQuadruple::h(int n) const { return g(n); }
double CoefficientQuadruple::k(int n) const { return f(n); }

CoefficientQuadruple solve_coefficients(const DeformationParams& params) {
  return CoefficientQuadruple{params};
}

XPPair build_xp(const FockRep& rep, const DeformationParams& params) {
  if (!structure_matches(rep.structure, params))
    throw StructureMismatch("build_xp: rep structure does not match the parameters");
  const Ladders l = make_ladders(rep);
  const double Q = params.Q;
  const DiagonalOp q_n = DiagonalOp::of(rep.dim, [Q](int n) { return std::pow(Q, n); });
  const DiagonalOp q_2n = DiagonalOp::of(rep.dim, [Q](int n) { return std::pow(Q, 2 * n); });
  DenseOp X = kInvSqrt2 * (q_2n * l.a_plus + q_n * l.a_minus);
  DenseOp P = (kI * kInvSqrt2) * (q_n * l.a_plus - q_2n * l.a_minus);
  return XPPair{std::move(X), std::move(P), params, rep};
}

LadderPair invert_to_ladders(const XPPair& pair) {
  const int d = pair.rep.dim;
  const double Q = pair.params.Q;
  const DiagonalOp q_mn = DiagonalOp::of(d, [Q](int n) { return std::pow(Q, -n); });
  const DiagonalOp dnq =
      DiagonalOp::of(d, [Q](int n) { return std::sqrt(2.0) / (1.0 + std::pow(Q, 2 * n)); });
  DenseOp a_minus = dnq * (q_mn * pair.X + kI * pair.P);
  DenseOp a_plus = dnq * (pair.X - kI * (q_mn * pair.P));
  return LadderPair{std::move(a_minus), std::move(a_plus)};
}

HaResiduals verify_ha_residuals(const XPPair& pair) {
  const auto& prm = pair.params;
  const DenseOp xp = pair.X * pair.P;
  const DenseOp px = pair.P * pair.X;
  const DenseOp delta = prm.p * xp - prm.q * px - kI * DenseOp::identity(pair.rep.dim);
  const double scale = std::max(xp.max_abs(), px.max_abs());

  return HaResiduals{scaled_interior_residual(delta, 2, scale),
                     hg_identity_residual(prm, 200)};
}

}  // namespace dol
