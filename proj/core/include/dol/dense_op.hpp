#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace dol {

using complex = std::complex<double>;

/// Dense complex square matrix, row-major. Sized for truncated Fock spaces
/// (dim up to a few hundred), so all algebra is plain triple loops.
class DenseOp {
 public:
  DenseOp() = default;
  explicit DenseOp(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {}

  static DenseOp identity(int dim);

  int dim() const { return dim_; }

  complex& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
  const complex& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }

  /// Conjugate transpose.
  DenseOp adjoint() const;

  double max_abs() const;
  double max_abs_real() const;
  double max_abs_imag() const;

  DenseOp& operator+=(const DenseOp& o);
  DenseOp& operator-=(const DenseOp& o);
  DenseOp& operator*=(complex s);

 private:
  int dim_ = 0;
  std::vector<complex> a_;
};

DenseOp operator+(DenseOp a, const DenseOp& b);
DenseOp operator-(DenseOp a, const DenseOp& b);
DenseOp operator*(const DenseOp& a, const DenseOp& b);
DenseOp operator*(complex s, DenseOp a);
DenseOp operator*(double s, DenseOp a);
DenseOp operator-(DenseOp a);

DenseOp commutator(const DenseOp& a, const DenseOp& b);

/// Real diagonal operator f(N): entry k holds f(k).
class DiagonalOp {
 public:
  DiagonalOp() = default;
  explicit DiagonalOp(int dim) : d_(static_cast<size_t>(dim), 0.0) {}

  template <class F>
  static DiagonalOp of(int dim, F f) {
    DiagonalOp d(dim);
    for (int n = 0; n < dim; ++n) d.d_[static_cast<size_t>(n)] = f(n);
    return d;
  }

  int dim() const { return static_cast<int>(d_.size()); }
  double value(int n) const { return d_[static_cast<size_t>(n)]; }
  double& operator[](int n) { return d_[static_cast<size_t>(n)]; }

  DiagonalOp inverse() const;
  DenseOp to_dense() const;

 private:
  std::vector<double> d_;
};

/// Row scaling: (diag * M)[i][j] = d(i) M[i][j].
DenseOp operator*(const DiagonalOp& d, const DenseOp& m);
/// Column scaling: (M * diag)[i][j] = M[i][j] d(j).
DenseOp operator*(const DenseOp& m, const DiagonalOp& d);
DiagonalOp operator*(const DiagonalOp& a, const DiagonalOp& b);
DenseOp operator-(const DenseOp& m, const DiagonalOp& d);

}  // namespace dol
