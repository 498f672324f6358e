// Integral lattices presented through a base of norm generators: entries
// a_1..a_m with R_i = ord(a_i) subject to R_i <= R_{i+2} and, for adjacent
// pairs, R_{i+1} - R_i >= -2e together with
// R_{i+1} - R_i + d(-a_i a_{i+1}) >= 0. The alpha invariants attached to
// adjacent pairs drive all representation decisions.
#pragma once

#include <vector>

#include "dyadic/field.h"
#include "dyadic/space.h"

namespace dyadic {

class BongLattice {
 public:
  int rank() const { return static_cast<int>(a_.size()); }
  const FieldContext& ctx() const { return *ctx_; }
  const FieldElement& a(int i) const;  // 1-based
  std::int64_t R(int i) const;         // 1-based
  Val alpha(int i) const;              // 1-based, defined for 1 <= i <= m-1
  const std::vector<std::int64_t>& R_all() const { return R_; }
  const std::vector<Val>& alpha_all() const { return alpha_; }

  SquareClass prefix_class(int i) const;  // class of a_1 ... a_i, 0 <= i <= m
  int prefix_hasse(int i) const;          // Hasse symbol of [a_1, ..., a_i]
  SpaceInv prefix_space(int i) const;
  SpaceInv space() const { return prefix_space(rank()); }

  // d[c a_i ... a_j]: defect order of the product class, floored against the
  // neighbouring alpha values when those exist (empty product at i = j+1).
  Val d_bracket(const SquareClass& c, int i, int j) const;

 private:
  friend BongLattice make_bong(const FieldContext& ctx, std::vector<FieldElement> diag);
  BongLattice() = default;

  const FieldContext* ctx_ = nullptr;
  std::vector<FieldElement> a_;
  std::vector<std::int64_t> R_;
  std::vector<Val> alpha_;        // alpha_[i-1] holds alpha_i
  std::vector<SquareClass> pre_;  // pre_[i] = class of a_1 ... a_i
  std::vector<int> hasse_;        // hasse_[i] = Hasse symbol of the i-prefix
};

// Validates the entry list and computes the derived invariants; throws
// NotAGoodBong with the offending index otherwise.
BongLattice make_bong(const FieldContext& ctx, std::vector<FieldElement> diag);

BongLattice hyperbolic_lattice(const FieldContext& ctx);   // R = (0, -2e)
BongLattice a22rho_lattice(const FieldContext& ctx);       // R = (0, -2e), det ~ -Delta
BongLattice pi_a22rho_lattice(const FieldContext& ctx);    // R = (1, 1-2e)
BongLattice unary_lattice(const FieldContext& ctx, const FieldElement& a);
// Juxtaposes the entry lists and revalidates the result in full.
BongLattice concat(const BongLattice& x, const BongLattice& y);

// Cross-lattice bracket d[c a_{1,i} b_{1,j}] over lattices m and n.
Val d_bracket_pair(const BongLattice& m, const BongLattice& n, const SquareClass& c,
                   int i, int j);
// The interleaving bound A_i(m, n), defined for 1 <= i <= min(rank m - 1, rank n).
Val big_a(const BongLattice& m, const BongLattice& n, int i);

}  // namespace dyadic
