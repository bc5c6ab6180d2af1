#include <doctest.h>

#include <cmath>

#include "dol/hamiltonian.hpp"
#include "dol/pseudo_hermitian.hpp"

using namespace dol;

TEST_CASE("eta factor closed forms") {
  const DeformationParams prm(1.1);
  const EtaFactor ex(EtaKind::X, prm);
  CHECK(ex.value(0) == 1.0);
  CHECK(ex.value(1) == doctest::Approx(1.21).epsilon(1e-14));  // Q^{1*4/2} = Q^2
  const EtaFactor ep(EtaKind::P, prm);
  CHECK(ep.value(0) == 1.0);
  CHECK(ep.value(1) == doctest::Approx(1.1).epsilon(1e-14));  // Q^{1*2/2} = Q^1
  const EtaFactor eh(EtaKind::H, prm);
  CHECK(eh.value(2) == doctest::Approx(std::pow(1.1, 6)).epsilon(1e-14));
  const EtaFactor et(EtaKind::Tilde, prm);
  CHECK(et.value(2) == doctest::Approx(std::pow(1.1, 3)).epsilon(1e-14));

  const DeformationParams unit(1.0);
  for (EtaKind k : {EtaKind::X, EtaKind::P, EtaKind::H, EtaKind::Tilde})
    CHECK(EtaFactor(k, unit).value(7) == 1.0);
}

TEST_CASE("eta values outside double range raise OutOfRange") {
  const EtaFactor ex(EtaKind::X, DeformationParams(0.3));
  CHECK_THROWS_AS(ex.value(200), OutOfRange);
  CHECK(std::isfinite(ex.log_value(200)));
}

TEST_CASE("recurrence consistency of the closed forms") {
  for (double q : {0.59, 1.1}) {
    const DeformationParams prm(q);
    for (EtaKind k : {EtaKind::X, EtaKind::P, EtaKind::H, EtaKind::Tilde})
      CHECK(eta_recurrence_check(k, prm, 512) <= 1e-12);
  }
  CHECK(eta_recurrence_check(EtaKind::X, DeformationParams(1.0), 100) == 0.0);
  CHECK_THROWS_AS(eta_recurrence_check(EtaKind::X, DeformationParams(1.1), 600),
                  InvalidArgument);
}

TEST_CASE("pseudo-adjoint residual vanishes for Hermitian operators at eta = 1") {
  const FockRep rep(16, StructureFunction::nonstandard_q(1.0));
  const DenseOp h = build_h_number_form(rep);
  CHECK(pseudo_adjoint_residual(h, EtaFactor(EtaKind::H, DeformationParams(1.0)), 1) == 0.0);
}

TEST_CASE("X and P are eta-pseudo-Hermitian") {
  const double q = 1.1;
  const DeformationParams prm(q);
  const FockRep rep(64, StructureFunction::nonstandard_q(q));
  const XPPair xp = build_xp(rep, prm);
  CHECK(pseudo_adjoint_residual(xp.X, EtaFactor(EtaKind::X, prm), 1) <= 1e-10);
  CHECK(pseudo_adjoint_residual(xp.P, EtaFactor(EtaKind::P, prm), 1) <= 1e-10);
}

TEST_CASE("X is genuinely non-Hermitian away from q = 1") {
  const FockRep rep(16, StructureFunction::nonstandard_q(1.1));
  const XPPair xp = build_xp(rep, DeformationParams(1.1));
  CHECK(interior_residual(xp.X.adjoint() - xp.X, 1) > 1e-3);
}

TEST_CASE("tilde operators") {
  const DeformationParams unit(1.0);
  const FockRep rep1(16, StructureFunction::nonstandard_q(1.0));
  const XPPair xp1 = build_xp(rep1, unit);
  const TildePair tp1 = tilde_operators(xp1);
  CHECK((tp1.x_tilde - xp1.X).max_abs() == 0.0);
  CHECK((tp1.p_tilde - xp1.P).max_abs() == 0.0);

  const double q = 1.1;
  const DeformationParams prm(q);
  const FockRep rep(32, StructureFunction::nonstandard_q(q));
  const XPPair xp = build_xp(rep, prm);
  const TildePair tp = tilde_operators(xp);
  const EtaFactor et(EtaKind::Tilde, prm);
  CHECK(pseudo_adjoint_residual(tp.x_tilde, et, 1) <= 1e-10);
  CHECK(pseudo_adjoint_residual(tp.p_tilde, et, 1) <= 1e-10);

  // (x~^2 + p~^2)/2 is the similarity-transformed pseudo-Hermitian Hamiltonian
  const DenseOp lhs = 0.5 * (tp.x_tilde * tp.x_tilde + tp.p_tilde * tp.p_tilde);
  const DenseOp h_psh = pseudo_sandwich_from(xp.X, xp.P, prm.Q);
  const DenseOp rhs = conjugate_by_q_power(h_psh, prm.Q, [](int n) { return 3LL * n; });
  CHECK(scaled_interior_residual(lhs - rhs, 2, lhs.max_abs()) <= 1e-10);
}

TEST_CASE("degree precondition propagates") {
  const FockRep rep(8, StructureFunction::nonstandard_q(1.1));
  const XPPair xp = build_xp(rep, DeformationParams(1.1));
  CHECK_THROWS_AS(pseudo_adjoint_residual(xp.X, EtaFactor(EtaKind::X, xp.params), 7),
                  DegreeTooLarge);
}
