// Isometry-level invariants of nondegenerate quadratic spaces over F and the
// classification predicates built on them. A space is pinned by (dim, det
// class, Hasse symbol), so everything here is finite bookkeeping over the
// square-class table.
#pragma once

#include <vector>

#include "dyadic/field.h"

namespace dyadic {

struct SpaceInv {
  int dim = 0;
  SquareClass det;  // discriminant square class
  int hasse = 1;    // product of Hilbert symbols over a diagonalization
};

SpaceInv space_of_diagonal(const FieldContext& ctx, const std::vector<FieldElement>& diag);
SpaceInv space_sum(const FieldContext& ctx, const SpaceInv& a, const SpaceInv& b);
SpaceInv line_space(const FieldContext& ctx, const SquareClass& c);
SpaceInv hyperbolic_space(const FieldContext& ctx, int planes);

bool is_isometric(const SpaceInv& a, const SpaceInv& b);
bool is_isotropic(const FieldContext& ctx, const SpaceInv& v);
// Does v contain an isometric copy of w?
bool space_represents(const FieldContext& ctx, const SpaceInv& w, const SpaceInv& v);
// Does v represent every space of dimension n?
bool space_n_universal(const FieldContext& ctx, const SpaceInv& v, int n);

// The distinguished n-dimensional space attached to a label (nu, c) with
// nu in {1, 2}; the two spaces of a label share dim and det but not Hasse.
// Throws UndefinedSpace for (nu, n, c) = (2, 2, trivial).
SpaceInv w_space(const FieldContext& ctx, int nu, int n, const SquareClass& c);

}  // namespace dyadic
