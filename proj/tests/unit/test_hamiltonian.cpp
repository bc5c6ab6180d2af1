#include <doctest.h>

#include <cmath>

#include "dol/hamiltonian.hpp"

using namespace dol;

TEST_CASE("quadratic coefficients, Hermitian form") {
  {
    const QuadCoefficients c = abcd(3, 1.0, HamiltonianForm::Hermitian);
    CHECK(c.A == 0.0);
    CHECK(c.B == 0.0);
    CHECK(c.C == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(c.D == doctest::Approx(0.5).epsilon(1e-15));
  }
  {
    const QuadCoefficients c = abcd(0, 1.1, HamiltonianForm::Hermitian);
    CHECK(c.B / c.A == doctest::Approx(1.771561).epsilon(1e-9));  // q^6
  }
  {
    const QuadCoefficients c = abcd(3, 0.59, HamiltonianForm::Hermitian);
    CHECK(c.D / c.C == doctest::Approx(0.205379).epsilon(1e-6));  // q^3
  }
  // operator-ordering form of Hermiticity: B(n) = A(n+2), D(n) = C(n+1)
  for (double q : {0.7, 1.3}) {
    for (int n = 0; n <= 20; ++n) {
      const QuadCoefficients c = abcd(n, q, HamiltonianForm::Hermitian);
      CHECK(c.B == abcd(n + 2, q, HamiltonianForm::Hermitian).A);
      CHECK(c.D == abcd(n + 1, q, HamiltonianForm::Hermitian).C);
    }
  }
  CHECK_THROWS_AS(abcd(0, -1.0, HamiltonianForm::Hermitian), NonPositiveParameter);
}

TEST_CASE("quadratic coefficients, pseudo-Hermitian form") {
  for (double q : {0.8, 1.1}) {
    for (int n = 0; n <= 20; ++n) {
      const QuadCoefficients t = abcd(n, q, HamiltonianForm::PseudoHermitian);
      const QuadCoefficients h = abcd(n, q, HamiltonianForm::Hermitian);
      CHECK(t.A == t.B);  // equal coefficients are what breaks Hermiticity
      // diagonal sectors are similarity invariants and keep the Hermitian values
      CHECK(t.C == h.C);
      CHECK(t.D == h.D);
      CHECK(t.C == doctest::Approx(std::pow(q, -3) * t.D).epsilon(1e-13));
    }
    const QuadCoefficients limit = abcd(5, 1.0, HamiltonianForm::PseudoHermitian);
    CHECK(limit.A == 0.0);
    CHECK(limit.C == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(limit.D == doctest::Approx(0.5).epsilon(1e-15));
  }
}

TEST_CASE("number-form Hamiltonian") {
  {
    const FockRep rep(8, StructureFunction::nonstandard_q(1.0));
    const DenseOp h = build_h_number_form(rep);
    for (int n = 0; n + 1 < 8; ++n)
      CHECK(h(n, n).real() == doctest::Approx(n + 0.5).epsilon(1e-14));
  }
  {
    const double q = 1.1;
    const FockRep rep(8, StructureFunction::nonstandard_q(q));
    const DenseOp h = build_h_number_form(rep);
    CHECK(h(0, 0).real() ==
          doctest::Approx(0.5 * 2.0 / (q * (1.0 + q * q))).epsilon(1e-14));  // Phi(1)/2
  }
}

TEST_CASE("number-form closed diagonal matches the matrix route") {
  for (auto [q, p] : {std::pair{1.1, 1.0}, {1.2, 0.8}, {0.59, 0.9}}) {
    const DeformationParams prm(q, p);
    const StructureFunction sf = (p == 1.0) ? StructureFunction::nonstandard_q(q)
                                            : StructureFunction::nonstandard_pq(q, p);
    const FockRep rep(32, sf);
    const DenseOp h = build_h_number_form(rep);
    const DiagonalOp closed =
        DiagonalOp::of(32, [&](int n) { return number_form_closed_diagonal(n, prm, sf); });
    CHECK(scaled_interior_residual(h - closed, 1, h.max_abs()) <= 1e-10);
  }
}

TEST_CASE("Hermitian Hamiltonian") {
  SUBCASE("q = 1 reduces to N + 1/2") {
    const FockRep rep(16, StructureFunction::nonstandard_q(1.0));
    const DenseOp h = build_h_hermitian(rep, 1.0);
    const DiagonalOp nh = DiagonalOp::of(16, [](int n) { return n + 0.5; });
    CHECK(interior_residual(h - nh, 2) <= 1e-12);
  }

  SUBCASE("interior Hermiticity across the parameter range") {
    for (double q : {0.3, 0.59, 1.1, 1.9, 3.0}) {
      for (int d : {16, 64}) {
        const FockRep rep(d, StructureFunction::nonstandard_q(q));
        const DenseOp h = build_h_hermitian(rep, q);
        CHECK(scaled_interior_residual(h - h.adjoint(), 2, h.max_abs()) <= 1e-10);
      }
    }
  }

  SUBCASE("sandwich and coefficient routes agree") {
    for (double q : {0.59, 1.1}) {
      const FockRep rep(64, StructureFunction::nonstandard_q(q));
      const DenseOp a = build_h_hermitian(rep, q);
      const DenseOp b = build_h_hermitian_sandwich(rep, q);
      CHECK(scaled_interior_residual(a - b, 2, a.max_abs()) <= 1e-10);
    }
  }

  SUBCASE("diagonal read-off") {
    const double q = 1.1;
    const FockRep rep(32, StructureFunction::nonstandard_q(q));
    const DenseOp h = build_h_hermitian(rep, q);
    for (int n = 0; n + 1 < 32; ++n) {
      const QuadCoefficients c = abcd(n, q, HamiltonianForm::Hermitian);
      const double expect = c.C * phi_q(n, q) + c.D * phi_q(n + 1, q);
      CHECK(h(n, n).real() == doctest::Approx(expect).epsilon(1e-12));
    }
  }

  SUBCASE("continuity at q -> 1") {
    for (double q : {1.0 + 1e-6, 1.0 - 1e-6}) {
      const FockRep rep(16, StructureFunction::nonstandard_q(q));
      const DenseOp h = build_h_hermitian(rep, q);
      const DiagonalOp nh = DiagonalOp::of(16, [](int n) { return n + 0.5; });
      CHECK(interior_residual(h - nh, 2) <= 1e-4);
    }
  }

  SUBCASE("structure mismatch") {
    const FockRep rep(8, StructureFunction::nonstandard_q(1.2));
    CHECK_THROWS_AS(build_h_hermitian(rep, 1.1), StructureMismatch);
    const FockRep ac(8, StructureFunction::arik_coon(1.1));
    CHECK_THROWS_AS(build_h_hermitian(ac, 1.1), StructureMismatch);
  }
}

TEST_CASE("pseudo-Hermitian Hamiltonian") {
  const double q = 1.1;
  const DeformationParams prm(q);

  SUBCASE("q = 1 reduces to N + 1/2") {
    const FockRep rep(16, StructureFunction::nonstandard_q(1.0));
    const DenseOp h = build_h_pseudo(rep, 1.0);
    const DiagonalOp nh = DiagonalOp::of(16, [](int n) { return n + 0.5; });
    CHECK(interior_residual(h - nh, 2) <= 1e-12);
  }

  SUBCASE("pseudo-Hermiticity with eta_H = Q^{3N}") {
    const FockRep rep(64, StructureFunction::nonstandard_q(q));
    const DenseOp h = build_h_pseudo(rep, q);
    CHECK(pseudo_adjoint_residual(h, EtaFactor(EtaKind::H, prm), 2) <= 1e-10);
  }

  SUBCASE("negative control: not plainly Hermitian") {
    const FockRep rep(16, StructureFunction::nonstandard_q(q));
    const DenseOp h = build_h_pseudo(rep, q);
    CHECK(interior_residual(h.adjoint() - h, 2) > 1e-3);
  }

  SUBCASE("sandwich and coefficient routes agree") {
    const FockRep rep(32, StructureFunction::nonstandard_q(q));
    const DenseOp a = build_h_pseudo(rep, q);
    const DenseOp b = build_h_pseudo_sandwich(rep, q);
    CHECK(scaled_interior_residual(a - b, 2, a.max_abs()) <= 1e-10);
  }

  SUBCASE("swap map: exchanging the operators and inverting q links the two forms") {
    const FockRep rep(32, StructureFunction::nonstandard_q(q));
    const XPPair xp = build_xp(rep, prm);
    const DenseOp lhs = pseudo_sandwich_from(xp.X, xp.P, prm.Q);
    const DenseOp rhs = hermitian_sandwich_from(xp.P, xp.X, 1.0 / prm.Q);
    CHECK(scaled_interior_residual(lhs - rhs, 2, lhs.max_abs()) <= 1e-10);
  }
}
