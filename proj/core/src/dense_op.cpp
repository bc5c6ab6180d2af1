#include "dol/dense_op.hpp"

#include <algorithm>
#include <cmath>

#include "dol/errors.hpp"

namespace dol {

namespace {
void require_same_dim(int a, int b) {
  if (a != b) throw DimensionMismatch("operator dimensions differ");
}
}  // namespace

DenseOp DenseOp::identity(int dim) {
  DenseOp m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

DenseOp DenseOp::adjoint() const {
  DenseOp r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

double DenseOp::max_abs() const {
  double m = 0.0;
  for (const auto& v : a_) m = std::max(m, std::abs(v));
  return m;
}

double DenseOp::max_abs_real() const {
  double m = 0.0;
  for (const auto& v : a_) m = std::max(m, std::abs(v.real()));
  return m;
}

double DenseOp::max_abs_imag() const {
  double m = 0.0;
  for (const auto& v : a_) m = std::max(m, std::abs(v.imag()));
  return m;
}

DenseOp& DenseOp::operator+=(const DenseOp& o) {
  require_same_dim(dim_, o.dim_);
  for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

DenseOp& DenseOp::operator-=(const DenseOp& o) {
  require_same_dim(dim_, o.dim_);
  for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

DenseOp& DenseOp::operator*=(complex s) {
  for (auto& v : a_) v *= s;
  return *this;
}

DenseOp operator+(DenseOp a, const DenseOp& b) { return a += b; }
DenseOp operator-(DenseOp a, const DenseOp& b) { return a -= b; }

DenseOp operator*(const DenseOp& a, const DenseOp& b) {
  require_same_dim(a.dim(), b.dim());
  const int n = a.dim();
  DenseOp r(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const complex aik = a(i, k);
      if (aik == complex(0.0, 0.0)) continue;
      for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

DenseOp operator*(complex s, DenseOp a) { return a *= s; }
DenseOp operator*(double s, DenseOp a) { return a *= complex(s, 0.0); }
DenseOp operator-(DenseOp a) { return a *= complex(-1.0, 0.0); }

DenseOp commutator(const DenseOp& a, const DenseOp& b) { return a * b - b * a; }

DiagonalOp DiagonalOp::inverse() const {
  DiagonalOp r(dim());
  for (int n = 0; n < dim(); ++n) {
    if (d_[static_cast<size_t>(n)] == 0.0) throw ZeroStructureValue("diagonal entry is zero");
    r[n] = 1.0 / d_[static_cast<size_t>(n)];
  }
  return r;
}

DenseOp DiagonalOp::to_dense() const {
  DenseOp m(dim());
  for (int n = 0; n < dim(); ++n) m(n, n) = d_[static_cast<size_t>(n)];
  return m;
}

DenseOp operator*(const DiagonalOp& d, const DenseOp& m) {
  require_same_dim(d.dim(), m.dim());
  DenseOp r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r(i, j) = d.value(i) * m(i, j);
  return r;
}

DenseOp operator*(const DenseOp& m, const DiagonalOp& d) {
  require_same_dim(d.dim(), m.dim());
  DenseOp r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r(i, j) = m(i, j) * d.value(j);
  return r;
}

DiagonalOp operator*(const DiagonalOp& a, const DiagonalOp& b) {
  require_same_dim(a.dim(), b.dim());
  return DiagonalOp::of(a.dim(), [&](int n) { return a.value(n) * b.value(n); });
}

DenseOp operator-(const DenseOp& m, const DiagonalOp& d) {
  require_same_dim(d.dim(), m.dim());
  DenseOp r = m;
  for (int n = 0; n < m.dim(); ++n) r(n, n) -= d.value(n);
  return r;
}

}  // namespace dol
