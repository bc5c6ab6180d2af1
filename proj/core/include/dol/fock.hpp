#pragma once

#include "dol/dense_op.hpp"
#include "dol/structure.hpp"

namespace dol {

/// Truncated Fock space span{|0>, ..., |dim-1>} over a structure function.
/// dim >= 4: operator identities of ladder degree 2 need interior states.
struct FockRep {
  int dim;
  StructureFunction structure;

  FockRep(int dim_, StructureFunction structure_);
};

struct Ladders {
  DenseOp a_minus;
  DenseOp a_plus;
  DiagonalOp number;
};

/// Ladder matrices with amplitudes sqrt(Phi(n)):
///   a_plus[n+1][n] = sqrt(Phi(n+1)),  a_minus[n-1][n] = sqrt(Phi(n)),
///   number[n][n] = n.  a_plus is exactly the adjoint of a_minus.
Ladders make_ladders(const FockRep& space);

/// Max-abs norm of op restricted to columns 0 .. dim-1-ladder_degree.
/// Truncation corrupts exactly the top `ladder_degree` columns of an identity
/// whose total raising power is `ladder_degree`; a zero residual on the rest
/// means the identity holds wherever truncation cannot interfere.
double interior_residual(const DenseOp& op, int ladder_degree);

/// interior_residual normalized by max(1, reference_scale). Identity checks
/// whose operands grow geometrically (q < 1 at large dim) are meaningful only
/// relative to the operand magnitude; at O(1) scales this is the plain norm.
double scaled_interior_residual(const DenseOp& op, int ladder_degree, double reference_scale);

}  // namespace dol
