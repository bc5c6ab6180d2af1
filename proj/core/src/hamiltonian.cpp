#include "dol/hamiltonian.hpp"

#include <cmath>

#include "dol/errors.hpp"

namespace dol {

namespace {

void require_q_structure(const FockRep& rep, double q) {
  const auto& sf = rep.structure;
  const bool ok = (sf.kind() == SfKind::NonstandardQ && sf.params().q == q) ||
                  (sf.kind() == SfKind::NonstandardPQ && sf.params().q == q &&
                   sf.params().p == 1.0);
  if (!ok) throw StructureMismatch("rep structure does not match q");
}

DenseOp assemble_quadratic(const FockRep& rep, double q, HamiltonianForm form) {
  const Ladders l = make_ladders(rep);
  const DenseOp app = l.a_plus * l.a_plus;
  const DenseOp amm = l.a_minus * l.a_minus;
  const DenseOp apm = l.a_plus * l.a_minus;
  const DenseOp amp = l.a_minus * l.a_plus;
  const int d = rep.dim;
  auto diag_of = [&](auto pick) {
    return DiagonalOp::of(d, [&, pick](int n) { return pick(abcd(n, q, form)); });
  };
  return diag_of([](const QuadCoefficients& c) { return c.A; }) * app +
         diag_of([](const QuadCoefficients& c) { return c.B; }) * amm +
         diag_of([](const QuadCoefficients& c) { return c.C; }) * apm +
         diag_of([](const QuadCoefficients& c) { return c.D; }) * amp;
}

}  // namespace

QuadCoefficients abcd(int n, double q, HamiltonianForm form) {
  if (q <= 0.0) throw NonPositiveParameter("abcd: q must be positive");
  const double sq = std::sqrt(q);
  const double w_minus = sq - 1.0 / sq;
  const double w_plus = sq + 1.0 / sq;
  QuadCoefficients c;
  if (form == HamiltonianForm::Hermitian) {
    c.A = 0.25 * std::pow(q, 3 * n - 3) * w_minus;
    c.B = 0.25 * std::pow(q, 3 * n + 3) * w_minus;
  } else {
    c.A = 0.25 * std::pow(q, 3 * n) * w_minus;
    c.B = c.A;
  }
  c.C = 0.25 * std::pow(q, 3.0 * n - 1.5) * w_plus;
  c.D = 0.25 * std::pow(q, 3.0 * n + 1.5) * w_plus;
  return c;
}

DenseOp build_h_number_form(const FockRep& rep) {
  const Ladders l = make_ladders(rep);
  return 0.5 * (l.a_minus * l.a_plus + l.a_plus * l.a_minus);
}

double number_form_closed_diagonal(int n, const DeformationParams& params,
                                   const StructureFunction& phi) {
  const double Q = params.Q;
  const double c = (1.0 / params.p) * std::pow(Q, -2 * n - 1) / (1.0 + std::pow(Q, 2 * n + 2));
  const double w =
      0.5 * (1.0 + (1.0 / Q) * (1.0 + std::pow(Q, 2 * n - 2)) / (1.0 + std::pow(Q, 2 * n + 2)));
  return c + w * phi.phi(n);
}

DenseOp build_h_hermitian(const FockRep& rep, double q) {
  require_q_structure(rep, q);
  return assemble_quadratic(rep, q, HamiltonianForm::Hermitian);
}

DenseOp build_h_pseudo(const FockRep& rep, double q) {
  require_q_structure(rep, q);
  return assemble_quadratic(rep, q, HamiltonianForm::PseudoHermitian);
}

DenseOp hermitian_sandwich_from(const DenseOp& x, const DenseOp& p, double Q) {
  auto x_quarters = [](int n) { return static_cast<long long>(n) * (n + 3); };
  auto p_quarters = [](int n) { return -static_cast<long long>(n) * (n - 3); };
  const DenseOp x2 = x * x;
  const DenseOp p2 = p * p;
  return 0.5 * (conjugate_by_q_power(x2, Q, x_quarters) +
                conjugate_by_q_power(p2, Q, p_quarters));
}

DenseOp pseudo_sandwich_from(const DenseOp& x, const DenseOp& p, double Q) {
  auto x_quarters = [](int n) { return static_cast<long long>(n) * (n - 3); };
  auto p_quarters = [](int n) { return -static_cast<long long>(n) * (n + 3); };
  const DenseOp x2 = x * x;
  const DenseOp p2 = p * p;
  return 0.5 * (conjugate_by_q_power(x2, Q, x_quarters) +
                conjugate_by_q_power(p2, Q, p_quarters));
}

DenseOp build_h_hermitian_sandwich(const FockRep& rep, double q) {
  require_q_structure(rep, q);
  const XPPair xp = build_xp(rep, DeformationParams(q, rep.structure.params().p));
  return hermitian_sandwich_from(xp.X, xp.P, xp.params.Q);
}

DenseOp build_h_pseudo_sandwich(const FockRep& rep, double q) {
  require_q_structure(rep, q);
  const XPPair xp = build_xp(rep, DeformationParams(q, rep.structure.params().p));
  return pseudo_sandwich_from(xp.X, xp.P, xp.params.Q);
}

}  // namespace dol
