#include <doctest.h>

#include <cmath>

#include "dol/bogoliubov.hpp"
#include "dol/spectrum.hpp"

using namespace dol;

TEST_CASE("CaseA mixing parameter") {
  SUBCASE("limit flag at q = 1") {
    const CaseAResult a = r_and_epsilon_caseA(1.0);
    CHECK(a.at_limit);
    CHECK(a.epsilon == 0.0);
    CHECK(std::isinf(a.r));
  }
  SUBCASE("both displayed closed forms agree") {
    for (double q : {0.6, 1.3, 2.0}) {
      const double second = r_and_epsilon_caseA(q).epsilon;
      const double first = std::pow(q, -0.5) * (q - 1.0) * (q * q + 1.0) *
                           (q * q + 1.0 / (q * q) - 1.0) /
                           ((q + 1.0) * (q + 1.0) * (q + 1.0 / q - 1.0));
      CHECK(second == doctest::Approx(first).epsilon(1e-13));
    }
  }
  SUBCASE("antisymmetry under q -> 1/q") {
    for (double q : {0.6, 0.9, 1.3, 2.0}) {
      CHECK(std::abs(r_and_epsilon_caseA(q).epsilon + r_and_epsilon_caseA(1.0 / q).epsilon) <=
            1e-12);
    }
  }
  SUBCASE("|eps| reaches 1 at the quoted boundary values") {
    CHECK(std::abs(std::abs(r_and_epsilon_caseA(2.11008657).epsilon) - 1.0) < 1e-6);
    CHECK(std::abs(std::abs(r_and_epsilon_caseA(0.4739142).epsilon) - 1.0) < 1e-6);
  }
  CHECK_THROWS_AS(r_and_epsilon_caseA(0.0), NonPositiveParameter);
}

TEST_CASE("CaseB roots") {
  SUBCASE("product and sum of the quadratic roots") {
    const CaseAResult a = r_and_epsilon_caseA(1.5);
    const CaseBRoots roots = caseB_roots(1.5);
    CHECK(std::abs(roots.plus * roots.minus - 1.0) <= 1e-12);
    CHECK(std::abs(roots.plus + roots.minus - 2.0 * a.r) <= 1e-12);
  }
  SUBCASE("valid branch per side of q = 1") {
    const double em = epsilon_caseB(1.5, CaseBSign::Minus);
    CHECK(em > -1.0);
    CHECK(em < 1.0);
    CHECK_THROWS_AS(epsilon_caseB(1.5, CaseBSign::Plus), OutsideAdmissibleRegion);

    const double ep = epsilon_caseB(0.59, CaseBSign::Plus);
    CHECK(ep > -1.0);
    CHECK(ep < 0.0);
    // r(0.59) = 1/eps_A(0.59) ~ -2.033, so the root is r + sqrt(r^2 - 1)
    const double r = r_and_epsilon_caseA(0.59).r;
    CHECK(ep == doctest::Approx(r + std::sqrt(r * r - 1.0)).epsilon(1e-12));
    CHECK(ep == doctest::Approx(-0.263).epsilon(2e-3));
    CHECK_THROWS_AS(epsilon_caseB(0.59, CaseBSign::Minus), OutsideAdmissibleRegion);
  }
  SUBCASE("branch antisymmetry under q -> 1/q") {
    for (double q : {0.6, 1.4, 1.9}) {
      const CaseBRoots a = caseB_roots(q);
      const CaseBRoots b = caseB_roots(1.0 / q);
      CHECK(std::abs(a.plus + b.minus) / std::max(1.0, std::abs(a.plus)) <= 1e-12);
      CHECK(std::abs(a.minus + b.plus) / std::max(1.0, std::abs(a.minus)) <= 1e-12);
    }
  }
  SUBCASE("outside the admissible window there is no root to take") {
    CHECK_THROWS_AS(caseB_roots(3.0), OutsideAdmissibleRegion);
    CHECK_THROWS_AS(caseB_roots(0.2), OutsideAdmissibleRegion);
  }
}

TEST_CASE("V and W coefficients") {
  SUBCASE("undeformed values") {
    for (double eps : {-0.5, 0.0, 0.9}) {
      const VW vw = vw_coefficients(1.0, eps);
      CHECK(vw.V == doctest::Approx(2.0).epsilon(1e-14));
      CHECK(vw.W == doctest::Approx(2.0).epsilon(1e-14));
    }
  }
  SUBCASE("CaseA symmetry W(q) = V(1/q)") {
    const double q = 1.3;
    const double w = vw_coefficients(q, r_and_epsilon_caseA(q).epsilon).W;
    const double v = vw_coefficients(1.0 / q, r_and_epsilon_caseA(1.0 / q).epsilon).V;
    CHECK(std::abs(w - v) <= 1e-12);
  }
  SUBCASE("CaseB breaks the symmetry") {
    const double q = 1.5;
    const double w = vw_coefficients(q, caseB_roots(q).minus).W;
    const double v = vw_coefficients(1.0 / q, caseB_roots(1.0 / q).minus).V;
    CHECK(std::abs(w - v) > 1e-6);
  }
}

TEST_CASE("energy values") {
  SUBCASE("undeformed limit is exact") {
    for (int n = 0; n <= 20; ++n) {
      CHECK(energy(n, 1.0, SpectrumBranch::CaseA) == n + 0.5);
      CHECK(energy(n, 1.0, SpectrumBranch::CaseBMinus) == n + 0.5);
    }
  }
  SUBCASE("ground state closed form") {
    for (double q : {0.59, 1.1}) {
      for (SpectrumBranch b :
           {SpectrumBranch::CaseA, SpectrumBranch::CaseBPlus, SpectrumBranch::CaseBMinus}) {
        if (!is_admissible(q, b)) continue;
        const VW vw = vw_coefficients(q, branch_epsilon(q, b));
        CHECK(std::abs(energy(0, q, b) - vw.W / (2.0 * q * (1.0 + q * q))) <= 1e-12);
      }
    }
  }
  SUBCASE("two independent evaluation paths agree") {
    for (double q : {0.59, 1.1, 1.9}) {
      const StructureFunction phi = StructureFunction::nonstandard_q(q);
      for (SpectrumBranch b :
           {SpectrumBranch::CaseA, SpectrumBranch::CaseBPlus, SpectrumBranch::CaseBMinus}) {
        if (!is_admissible(q, b)) continue;
        const GnbtSpec spec = GnbtSpec::canonical(phi, branch_epsilon(q, b));
        for (int n = 0; n <= 50; ++n) {
          const RstuCoefficients r = rstu(n, q, spec);
          const double recomb = -(r.S * phi_q(n, q) + r.T * phi_q(n + 1, q));
          CHECK(std::abs(energy(n, q, b) - recomb) <= 1e-12);
        }
      }
    }
  }
  SUBCASE("term split adds up to the full value") {
    const double q = 1.1;
    for (int n = 0; n <= 20; ++n) {
      const double full = energy(n, q, SpectrumBranch::CaseA);
      const double e1 = energy(n, q, SpectrumBranch::CaseA, TermFilter::E1Only);
      const double e2 = energy(n, q, SpectrumBranch::CaseA, TermFilter::E2Only);
      CHECK(full == doctest::Approx(e1 + e2).epsilon(1e-13));
    }
    CHECK(energy(0, q, SpectrumBranch::CaseA, TermFilter::E1Only) == 0.0);
  }
  SUBCASE("near-limit values track n + 1/2") {
    for (double q : {1.0 + 1e-6, 1.0 - 1e-6}) {
      for (SpectrumBranch b :
           {SpectrumBranch::CaseA, SpectrumBranch::CaseBPlus, SpectrumBranch::CaseBMinus}) {
        if (!is_admissible(q, b)) continue;
        for (int n = 0; n <= 20; ++n)
          CHECK(std::abs(energy(n, q, b) - (n + 0.5)) <= 1e-4);
      }
    }
  }
  SUBCASE("inadmissible q is rejected") {
    CHECK_THROWS_AS(energy(3, 3.0, SpectrumBranch::CaseA), OutsideAdmissibleRegion);
    CHECK_THROWS_AS(energy(3, 1.5, SpectrumBranch::CaseBPlus), OutsideAdmissibleRegion);
  }
  SUBCASE("large n stays finite through the log-combined route") {
    for (double q : {0.59, 1.9}) {
      const double e = energy(400, q, SpectrumBranch::CaseA);
      CHECK(std::isfinite(e));
      CHECK(std::abs(e) < 1.0);  // spectrum decays at large n
    }
  }
}

TEST_CASE("admissible interval") {
  const AdmissibleInterval iv = admissible_interval(SpectrumBranch::CaseA, 1e-9);
  CHECK(std::abs(iv.q_low - 0.4739142) <= 1e-6);
  CHECK(std::abs(iv.q_high - 2.11008657) <= 1e-6);
  CHECK(std::abs(iv.q_low * iv.q_high - 1.0) <= 1e-6);
  // tighter tolerance converges to the same roots
  const AdmissibleInterval tight = admissible_interval(SpectrumBranch::CaseBMinus, 1e-12);
  CHECK(std::abs(tight.q_low - iv.q_low) <= 2e-9);
  CHECK(std::abs(tight.q_high - iv.q_high) <= 2e-9);
}

TEST_CASE("spectrum tables") {
  SUBCASE("row contents and the non-monotonicity marker at q = 1.1") {
    const SpectrumTable t = spectrum_table(1.1, SpectrumBranch::CaseA, 10);
    REQUIRE(t.rows.size() == 11);
    CHECK(t.rows[0].phi_n == 0.0);
    CHECK(t.rows[3].phi_n == phi_q(3, 1.1));
    CHECK(t.rows[3].phi_n1 == phi_q(4, 1.1));
    CHECK(t.rows[3].energy == energy(3, 1.1, SpectrumBranch::CaseA));
    REQUIRE(!t.turning_points.empty());
    CHECK(t.turning_points.front() == 9);
  }
  SUBCASE("q = 0.59 branches turn early") {
    for (SpectrumBranch b : {SpectrumBranch::CaseA, SpectrumBranch::CaseBPlus}) {
      const SpectrumTable t = spectrum_table(0.59, b, 10);
      CHECK(!t.turning_points.empty());
    }
  }
  SUBCASE("the undeformed table is linear and exact") {
    const SpectrumTable t = spectrum_table(1.0, SpectrumBranch::CaseA, 10);
    for (const auto& r : t.rows) CHECK(r.energy == r.n + 0.5);
    CHECK(t.turning_points.empty());
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(spectrum_table(3.0, SpectrumBranch::CaseA, 5), OutsideAdmissibleRegion);
    CHECK_THROWS_AS(spectrum_table(1.1, SpectrumBranch::CaseA, 600), InvalidArgument);
  }
}

TEST_CASE("branch names round-trip") {
  for (SpectrumBranch b :
       {SpectrumBranch::CaseA, SpectrumBranch::CaseBPlus, SpectrumBranch::CaseBMinus}) {
    SpectrumBranch parsed;
    REQUIRE(parse_branch(branch_name(b), parsed));
    CHECK(parsed == b);
  }
  SpectrumBranch ignored;
  CHECK(!parse_branch("caseC", ignored));
}
