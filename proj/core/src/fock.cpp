#include "dol/fock.hpp"

#include <algorithm>
#include <cmath>

#include "dol/errors.hpp"

namespace dol {

FockRep::FockRep(int dim_, StructureFunction structure_)
    : dim(dim_), structure(std::move(structure_)) {
  if (dim < 4) throw DimensionTooSmall("FockRep: dim must be at least 4");
  for (int n = 0; n <= dim; ++n) {
    if (structure.phi(n) < 0.0)
      throw NegativeStructureValue("FockRep: Phi(n) < 0 inside the truncation");
  }
}

Ladders make_ladders(const FockRep& space) {
  const int d = space.dim;
  Ladders l{DenseOp(d), DenseOp(d), DiagonalOp::of(d, [](int n) { return double(n); })};
  for (int n = 1; n < d; ++n) {
    const double amp = std::sqrt(space.structure.phi(n));
    l.a_plus(n, n - 1) = amp;
    l.a_minus(n - 1, n) = amp;
  }
  return l;
}

double interior_residual(const DenseOp& op, int ladder_degree) {
  if (ladder_degree < 0 || ladder_degree >= op.dim() - 1)
    throw DegreeTooLarge("interior_residual: ladder_degree must be < dim - 1");
  double m = 0.0;
  for (int i = 0; i < op.dim(); ++i)
    for (int j = 0; j < op.dim() - ladder_degree; ++j) m = std::max(m, std::abs(op(i, j)));
  return m;
}

double scaled_interior_residual(const DenseOp& op, int ladder_degree, double reference_scale) {
  return interior_residual(op, ladder_degree) / std::max(1.0, reference_scale);
}

}  // namespace dol
