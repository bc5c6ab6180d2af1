#include "dol/bogoliubov.hpp"

#include <algorithm>
#include <cmath>

#include "dol/csv.hpp"
#include "dol/errors.hpp"

namespace dol {

namespace {
double exp_or_zero(double lv, const char* what) {
  if (lv < -745.0) return 0.0;
  if (lv > 708.0) throw OutOfRange(std::string(what) + ": value outside double range");
  return std::exp(lv);
}
}  // namespace

GnbtSpec::GnbtSpec(StructureFunction phi, StructureFunction chi, double epsilon, double kappa,
                   bool canonical)
    : phi_(std::move(phi)), chi_(std::move(chi)), epsilon_(epsilon), kappa_(kappa),
      canonical_(canonical) {
  if (!(std::abs(epsilon) < 1.0))
    throw EpsilonOutOfRange("GnbtSpec: epsilon must lie in (-1, 1)");
  if (!(kappa > 0.0)) throw NonPositiveParameter("GnbtSpec: kappa must be positive");
}

GnbtSpec GnbtSpec::canonical(const StructureFunction& phi, double epsilon, double kappa) {
  return GnbtSpec(phi, StructureFunction::scaled(phi, kappa), epsilon, kappa, true);
}

GnbtSpec GnbtSpec::general(const StructureFunction& phi, const StructureFunction& chi,
                           double epsilon) {
  return GnbtSpec(phi, chi, epsilon, 1.0, false);
}

double GnbtSpec::zeta(int n) const {
  if (canonical_) return 1.0 / std::sqrt(kappa_);
  if (n == 0) n = 1;
  return std::exp(0.5 * (phi_.log_phi(n) - chi_.log_phi(n)));
}

double GnbtSpec::zeta_inv(int n) const {
  if (canonical_) return std::sqrt(kappa_);
  if (n == 0) n = 1;
  return std::exp(0.5 * (chi_.log_phi(n) - phi_.log_phi(n)));
}

COps build_c_ops(const FockRep& rep, const GnbtSpec& spec) {
  if (!rep.structure.same_as(spec.source()))
    throw StructureMismatch("build_c_ops: rep structure differs from the spec source");
  const int d = rep.dim;
  const double eps = spec.epsilon();
  const double s = 1.0 / std::sqrt(1.0 - eps * eps);
  COps c{DenseOp(d), DenseOp(d)};
  for (int n = 1; n < d; ++n) {
    const double phi_n = rep.structure.phi(n);
    if (!(phi_n > 0.0)) throw ZeroStructureValue("build_c_ops: Phi(n) must be positive");
    const double u = spec.zeta_inv(n) * std::sqrt(phi_n) * s;
    const double eu = eps * u;
    c.c_plus(n, n - 1) = u;
    c.c_plus(n - 1, n) = eu;
    c.c_minus(n, n - 1) = eu;
    c.c_minus(n - 1, n) = u;
  }
  return c;
}

LadderPairC invert_gnbt(const DenseOp& c_minus, const DenseOp& c_plus, const GnbtSpec& spec) {
  const int d = c_minus.dim();
  const double eps = spec.epsilon();
  const double s = 1.0 / std::sqrt(1.0 - eps * eps);
  const DiagonalOp z0 = DiagonalOp::of(d, [&](int n) { return spec.zeta(n); });
  const DiagonalOp z1 = DiagonalOp::of(d, [&](int n) { return spec.zeta(n + 1); });
  DenseOp a_minus = s * (z1 * (c_minus - complex(eps) * c_plus));
  DenseOp a_plus = s * (z0 * (c_plus - complex(eps) * c_minus));
  return LadderPairC{std::move(a_minus), std::move(a_plus)};
}

GnbtG gnbt_coefficients(int n, const GnbtSpec& spec) {
  const double eps = spec.epsilon();
  const double s = 1.0 / std::sqrt(1.0 - eps * eps);
  GnbtG g;
  g.g2 = spec.zeta_inv(n + 1) * s;
  g.g1 = (n >= 1) ? eps * (spec.zeta_inv(n) * s) : 0.0;
  return g;
}

RstuCoefficients rstu(int n, double q, const GnbtSpec& spec) {
  const QuadCoefficients c = abcd(n, q, HamiltonianForm::Hermitian);
  const double eps = spec.epsilon();
  const double zn = spec.zeta(n);
  const double zn1 = spec.zeta(n + 1);
  RstuCoefficients r;
  r.R = c.A * zn - eps * c.D * zn1;
  r.S = eps * c.B * zn1 - c.C * zn;
  r.T = eps * c.A * zn - c.D * zn1;
  r.U = c.B * zn1 - eps * c.C * zn;
  return r;
}

DenseOp transformed_hamiltonian(const FockRep& rep, double q, const GnbtSpec& spec) {
  const int d = rep.dim;
  const double eps = spec.epsilon();
  const double pref = 1.0 / (1.0 - eps * eps);
  const COps c = build_c_ops(rep, spec);
  const DiagonalOp z0 = DiagonalOp::of(d, [&](int n) { return spec.zeta(n); });
  const DiagonalOp z1 = DiagonalOp::of(d, [&](int n) { return spec.zeta(n + 1); });
  auto diag_of = [&](auto pick) {
    return DiagonalOp::of(d, [&, pick](int n) { return pick(rstu(n, q, spec)); });
  };
  const DiagonalOp Rd = diag_of([](const RstuCoefficients& r) { return r.R; });
  const DiagonalOp Sd = diag_of([](const RstuCoefficients& r) { return r.S; });
  const DiagonalOp Td = diag_of([](const RstuCoefficients& r) { return r.T; });
  const DiagonalOp Ud = diag_of([](const RstuCoefficients& r) { return r.U; });

  DenseOp h = Rd * (c.c_plus * (z0 * c.c_plus));
  h += eps * (Sd * (c.c_plus * (z1 * c.c_plus)));
  h += eps * (Td * (c.c_minus * (z0 * c.c_minus)));
  h += Ud * (c.c_minus * (z1 * c.c_minus));
  h -= eps * (Rd * (c.c_plus * (z0 * c.c_minus)));
  h -= Sd * (c.c_plus * (z1 * c.c_minus));
  h -= Td * (c.c_minus * (z0 * c.c_plus));
  h -= eps * (Ud * (c.c_minus * (z1 * c.c_plus)));
  return pref * h;
}

DiagonalOp quasi_free_hamiltonian(double q, const GnbtSpec& spec, int nmax) {
  if (!spec.is_canonical())
    throw NonCanonicalSpec("quasi_free_hamiltonian: canonical spec required");
  if (nmax < 0 || nmax > 512) throw InvalidArgument("quasi_free_hamiltonian: nmax must be <= 512");
  const double eps = spec.epsilon();
  const double sq = std::sqrt(q);
  const double w_minus = sq - 1.0 / sq;
  const double w_plus = sq + 1.0 / sq;
  const double core_s = 0.25 * (eps * std::pow(q, 3) * w_minus - std::pow(q, -1.5) * w_plus);
  const double core_t = 0.25 * (eps * std::pow(q, -3) * w_minus - std::pow(q, 1.5) * w_plus);
  const double L = std::log(q);
  const auto& phi = spec.source();
  return DiagonalOp::of(nmax + 1, [&](int n) {
    const double t1 =
        (n == 0) ? 0.0 : exp_or_zero(3.0 * n * L + phi.log_phi(n), "quasi_free_hamiltonian");
    const double t2 = exp_or_zero(3.0 * n * L + phi.log_phi(n + 1), "quasi_free_hamiltonian");
    return -(core_s * t1 + core_t * t2);
  });
}

ConstraintTable constraint_residuals(double q, const GnbtSpec& spec, int horizon, int dim) {
  if (spec.epsilon() == 0.0)
    throw EpsilonOutOfRange("constraint_residuals: epsilon must be nonzero");
  if (horizon < 0 || horizon > 512)
    throw InvalidArgument("constraint_residuals: horizon must be <= 512");
  const double eps = spec.epsilon();

  ConstraintTable table;
  table.q = q;
  table.epsilon = eps;
  table.kappa = spec.kappa();
  table.rows.reserve(static_cast<size_t>(horizon) + 1);

  // Kappa-free scalar cores; in the canonical case zeta is constant and the
  // kappa^{-1/2} scale of R..U drops out of the reported combinations.
  auto core = [&](int n) {
    const QuadCoefficients c = abcd(n, q, HamiltonianForm::Hermitian);
    RstuCoefficients r;
    if (spec.is_canonical()) {
      r.R = c.A - eps * c.D;
      r.S = eps * c.B - c.C;
      r.T = eps * c.A - c.D;
      r.U = c.B - eps * c.C;
    } else {
      r = rstu(n, q, spec);
    }
    return r;
  };
  auto x_of = [&](int n) {
    return spec.is_canonical() ? 1.0 : spec.zeta(n - 1) / spec.zeta(n);
  };
  auto y_of = [&](int n) {
    return spec.is_canonical() ? 1.0 : spec.zeta(n + 2) / spec.zeta(n + 1);
  };

  for (int n = 0; n <= horizon; ++n) {
    ConstraintRow row{n, 0.0, 0.0, 0.0, 0.0};
    const RstuCoefficients up = core(n + 1);
    row.g1 = x_of(n + 1) * up.R + eps * up.S;
    row.g3 = eps * (up.U + eps * x_of(n + 1) * up.T);
    if (n >= 1) {
      const RstuCoefficients dn = core(n - 1);
      row.g2 = dn.R + eps * y_of(n - 1) * dn.S;
      row.g4 = eps * dn.T + y_of(n - 1) * dn.U;
    }
    table.rows.push_back(row);
  }

  // Off-diagonal sector of the transformed Hamiltonian: the c+..c+ / c-..c-
  // part that the diagonalization constraints would have to remove.
  const FockRep rep(dim, spec.source());
  const COps c = build_c_ops(rep, spec);
  const double pref = 1.0 / (1.0 - eps * eps);
  const DiagonalOp z0 = DiagonalOp::of(dim, [&](int n) { return spec.zeta(n); });
  const DiagonalOp z1 = DiagonalOp::of(dim, [&](int n) { return spec.zeta(n + 1); });
  auto diag_of = [&](auto pick) {
    return DiagonalOp::of(dim, [&, pick](int n) { return pick(rstu(n, q, spec)); });
  };
  DenseOp off = diag_of([](const RstuCoefficients& r) { return r.R; }) *
                (c.c_plus * (z0 * c.c_plus));
  off += eps * (diag_of([](const RstuCoefficients& r) { return r.S; }) *
                (c.c_plus * (z1 * c.c_plus)));
  off += eps * (diag_of([](const RstuCoefficients& r) { return r.T; }) *
                (c.c_minus * (z0 * c.c_minus)));
  off += diag_of([](const RstuCoefficients& r) { return r.U; }) *
         (c.c_minus * (z1 * c.c_minus));
  off = pref * off;
  const DenseOp h_ref = build_h_hermitian(rep, q);
  table.offdiag_residual = scaled_interior_residual(off, 2, h_ref.max_abs());

  // Off-diagonal part of c+c- - chi(N): the bilinear is not assumed to hold
  // as an operator identity, only measured.
  DenseOp bil = c.c_plus * c.c_minus;
  const double bil_scale = bil.max_abs();
  for (int n = 0; n < dim; ++n) bil(n, n) = 0.0;
  table.bilinear_offdiag = scaled_interior_residual(bil, 2, bil_scale);

  return table;
}

std::string ConstraintTable::to_csv() const {
  std::vector<std::vector<std::string>> rows_out;
  rows_out.reserve(rows.size());
  for (const auto& r : rows) {
    rows_out.push_back({std::to_string(r.n), csv::format_sci(r.g1), csv::format_sci(r.g2),
                        csv::format_sci(r.g3), csv::format_sci(r.g4)});
  }
  return csv::table({"n", "gamma1", "gamma2", "gamma3", "gamma4"}, rows_out);
}

}  // namespace dol
