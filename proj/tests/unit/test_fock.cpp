#include <doctest.h>

#include <cmath>
#include <random>

#include "dol/fock.hpp"

using namespace dol;

TEST_CASE("bosonic ladders have sqrt(n) amplitudes") {
  const FockRep rep(4, StructureFunction::arik_coon(1.0));
  const Ladders l = make_ladders(rep);
  CHECK(l.a_plus(1, 0) == complex(1.0, 0.0));
  CHECK(l.a_plus(2, 1).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(l.a_plus(3, 2).real() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(l.number.value(2) == 2.0);
}

TEST_CASE("dimension below 4 is rejected") {
  CHECK_THROWS_AS(FockRep(3, StructureFunction::arik_coon(1.0)), DimensionTooSmall);
}

TEST_CASE("the vacuum is annihilated") {
  const FockRep rep(4, StructureFunction::nonstandard_q(1.3));
  const Ladders l = make_ladders(rep);
  for (int i = 0; i < rep.dim; ++i) CHECK(l.a_minus(i, 0) == complex(0.0, 0.0));
}

TEST_CASE("number-basis expectation reproduces the structure function") {
  const double q = 1.1;
  const FockRep rep(8, StructureFunction::nonstandard_q(q));
  const Ladders l = make_ladders(rep);
  const DenseOp n_op = l.a_plus * l.a_minus;
  CHECK(n_op(1, 1).real() ==
        doctest::Approx(2.0 / (q * (1.0 + q * q))).epsilon(1e-14));  // Phi(1)
  CHECK(n_op(5, 5).real() == doctest::Approx(phi_q(5, q)).epsilon(1e-14));
}

TEST_CASE("a_plus is exactly the adjoint of a_minus") {
  for (double q : {0.59, 1.0, 1.7}) {
    const FockRep rep(16, StructureFunction::nonstandard_q(q));
    const Ladders l = make_ladders(rep);
    CHECK((l.a_minus.adjoint() - l.a_plus).max_abs() == 0.0);
  }
}

TEST_CASE("interior residual") {
  const double q = 1.2;
  const FockRep rep(8, StructureFunction::nonstandard_q(q));
  const Ladders l = make_ladders(rep);

  SUBCASE("zero matrix") { CHECK(interior_residual(DenseOp(8), 2) == 0.0); }

  SUBCASE("a+a- equals Phi(N) on the whole truncated space") {
    const DiagonalOp phi = DiagonalOp::of(8, [&](int n) { return rep.structure.phi(n); });
    CHECK(interior_residual(l.a_plus * l.a_minus - phi, 0) < 1e-15);
  }

  SUBCASE("a-a+ equals Phi(N+1) only away from the truncation edge") {
    const DiagonalOp phi1 = DiagonalOp::of(8, [&](int n) { return rep.structure.phi(n + 1); });
    const DenseOp delta = l.a_minus * l.a_plus - phi1;
    CHECK(interior_residual(delta, 1) < 1e-15);
    // the unprojected top diagonal entry is -Phi(dim)
    CHECK(delta(7, 7).real() == doctest::Approx(-rep.structure.phi(8)).epsilon(1e-14));
    CHECK(interior_residual(delta, 0) ==
          doctest::Approx(rep.structure.phi(8)).epsilon(1e-14));
  }

  SUBCASE("degree precondition") {
    CHECK_THROWS_AS(interior_residual(DenseOp(8), 7), DegreeTooLarge);
    CHECK_NOTHROW(interior_residual(DenseOp(8), 6));
  }
}

TEST_CASE("diagonal functions commute through the ladders with a shift") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  const FockRep rep(12, StructureFunction::nonstandard_q(0.8));
  const Ladders l = make_ladders(rep);
  for (int trial = 0; trial < 25; ++trial) {
    const double a = u(rng), b = u(rng), c = u(rng);
    auto f = [&](int n) { return a + b * n + c * n * n; };
    const DiagonalOp f0 = DiagonalOp::of(12, f);
    const DiagonalOp f1 = DiagonalOp::of(12, [&](int n) { return f(n + 1); });
    const DiagonalOp fm1 = DiagonalOp::of(12, [&](int n) { return f(n - 1); });
    CHECK(interior_residual(f0 * l.a_plus - l.a_plus * f1, 1) <= 1e-12);
    CHECK(interior_residual(f0 * l.a_minus - l.a_minus * fm1, 1) <= 1e-12);
  }
}

TEST_CASE("ladder commutator equals the structure-function difference") {
  for (double q : {0.7, 1.0, 1.4}) {
    const FockRep rep(16, StructureFunction::nonstandard_q(q));
    const Ladders l = make_ladders(rep);
    const DenseOp comm = commutator(l.a_minus, l.a_plus);
    const DiagonalOp gap =
        DiagonalOp::of(16, [&](int n) { return rep.structure.phi(n + 1) - rep.structure.phi(n); });
    CHECK(scaled_interior_residual(comm - gap, 1, comm.max_abs()) <= 1e-12);
  }
}
