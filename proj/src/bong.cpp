#include "dyadic/bong.h"

#include <string>

namespace dyadic {

const FieldElement& BongLattice::a(int i) const {
  if (i < 1 || i > rank()) throw IndexError("entry index out of range");
  return a_[static_cast<std::size_t>(i) - 1];
}

std::int64_t BongLattice::R(int i) const {
  if (i < 1 || i > rank()) throw IndexError("R index out of range");
  return R_[static_cast<std::size_t>(i) - 1];
}

Val BongLattice::alpha(int i) const {
  if (i < 1 || i > rank() - 1) throw IndexError("alpha index out of range");
  return alpha_[static_cast<std::size_t>(i) - 1];
}

SquareClass BongLattice::prefix_class(int i) const {
  if (i < 0 || i > rank()) throw IndexError("prefix index out of range");
  return pre_[static_cast<std::size_t>(i)];
}

int BongLattice::prefix_hasse(int i) const {
  if (i < 0 || i > rank()) throw IndexError("prefix index out of range");
  return hasse_[static_cast<std::size_t>(i)];
}

SpaceInv BongLattice::prefix_space(int i) const {
  return SpaceInv{i, prefix_class(i), prefix_hasse(i)};
}

Val BongLattice::d_bracket(const SquareClass& c, int i, int j) const {
  if (i < 1 || j > rank() || i > j + 1) throw IndexError("bracket range out of order");
  SquareClass cls = ctx_->class_mul(c, ctx_->class_mul(prefix_class(j), prefix_class(i - 1)));
  Val d = cls.dval();
  if (i - 1 >= 1 && i - 1 <= rank() - 1) d = std::min(d, alpha(i - 1));
  if (j >= 1 && j <= rank() - 1) d = std::min(d, alpha(j));
  return d;
}

BongLattice make_bong(const FieldContext& ctx, std::vector<FieldElement> diag) {
  const int m = static_cast<int>(diag.size());
  if (m < 1) throw BadParams("a lattice needs at least one entry");
  const std::int64_t twoe = 2 * ctx.e();

  BongLattice L;
  L.ctx_ = &ctx;
  L.a_ = std::move(diag);
  L.R_.resize(m);
  std::vector<SquareClass> cls(m);
  for (int i = 0; i < m; ++i) {
    if (L.a_[i].is_exact_zero()) throw BadParams("lattice entries must be nonzero");
    L.R_[i] = L.a_[i].ord();
    cls[i] = ctx.class_of(L.a_[i]);
  }
  for (int i = 1; i + 2 <= m; ++i) {
    if (L.R_[i - 1] > L.R_[i + 1])
      throw NotAGoodBong(i, "R(i) <= R(i+2) fails");
  }
  const SquareClass neg = ctx.neg_one_class();
  std::vector<Val> dpair(m > 1 ? m - 1 : 0, Val::inf());
  for (int i = 1; i <= m - 1; ++i) {
    std::int64_t diff = L.R_[i] - L.R_[i - 1];
    if (diff < -twoe) throw NotAGoodBong(i, "R(i+1) - R(i) >= -2e fails");
    dpair[i - 1] = ctx.class_mul(neg, ctx.class_mul(cls[i - 1], cls[i])).dval();
    if (Val::of(diff) + dpair[i - 1] < Val::of(0))
      throw NotAGoodBong(i, "R(i+1) - R(i) + d(-a(i)a(i+1)) >= 0 fails");
  }

  // alpha_i as the direct minimum over the defining family.
  L.alpha_.assign(m > 1 ? m - 1 : 0, Val::inf());
  for (int i = 1; i <= m - 1; ++i) {
    Val best = Val::half(L.R_[i] - L.R_[i - 1] + twoe);
    for (int j = 1; j <= i; ++j)
      best = std::min(best, Val::of(L.R_[i] - L.R_[j - 1]) + dpair[j - 1]);
    for (int j = i; j <= m - 1; ++j)
      best = std::min(best, Val::of(L.R_[j] - L.R_[i - 1]) + dpair[j - 1]);
    L.alpha_[i - 1] = best;
  }
  // Cross-check against the three-term recurrence; a mismatch means the
  // invariant layer is broken, not that the input is bad.
  for (int i = 1; i <= m - 1; ++i) {
    Val inner = dpair[i - 1];
    if (i - 1 >= 1) inner = std::min(inner, L.alpha_[i - 2]);
    if (i + 1 <= m - 1) inner = std::min(inner, L.alpha_[i]);
    Val rec = std::min(Val::half(L.R_[i] - L.R_[i - 1] + twoe),
                       Val::of(L.R_[i] - L.R_[i - 1]) + inner);
    if (rec != L.alpha_[i - 1]) throw InternalFault("alpha recurrence mismatch");
  }

  L.pre_.assign(m + 1, ctx.trivial_class());
  L.hasse_.assign(m + 1, 1);
  for (int i = 1; i <= m; ++i) {
    L.hasse_[i] = L.hasse_[i - 1] * ctx.hilbert(L.pre_[i - 1], cls[i - 1]);
    L.pre_[i] = ctx.class_mul(L.pre_[i - 1], cls[i - 1]);
  }
  return L;
}

BongLattice hyperbolic_lattice(const FieldContext& ctx) {
  return make_bong(ctx, {ctx.one(), -ctx.pi_pow(-2 * ctx.e())});
}

BongLattice a22rho_lattice(const FieldContext& ctx) {
  return make_bong(ctx, {ctx.one(), -ctx.delta().mul_pi_pow(-2 * ctx.e())});
}

BongLattice pi_a22rho_lattice(const FieldContext& ctx) {
  return make_bong(ctx, {ctx.pi(), -ctx.delta().mul_pi_pow(1 - 2 * ctx.e())});
}

BongLattice unary_lattice(const FieldContext& ctx, const FieldElement& a) {
  return make_bong(ctx, {a});
}

BongLattice concat(const BongLattice& x, const BongLattice& y) {
  std::vector<FieldElement> diag;
  diag.reserve(static_cast<std::size_t>(x.rank() + y.rank()));
  for (int i = 1; i <= x.rank(); ++i) diag.push_back(x.a(i));
  for (int i = 1; i <= y.rank(); ++i) diag.push_back(y.a(i));
  return make_bong(x.ctx(), std::move(diag));
}

Val d_bracket_pair(const BongLattice& m, const BongLattice& n, const SquareClass& c,
                   int i, int j) {
  const FieldContext& ctx = m.ctx();
  SquareClass cls = ctx.class_mul(c, ctx.class_mul(m.prefix_class(i), n.prefix_class(j)));
  Val d = cls.dval();
  if (i >= 1 && i <= m.rank() - 1) d = std::min(d, m.alpha(i));
  if (j >= 1 && j <= n.rank() - 1) d = std::min(d, n.alpha(j));
  return d;
}

Val big_a(const BongLattice& m, const BongLattice& n, int i) {
  const FieldContext& ctx = m.ctx();
  if (i < 1 || i > m.rank() - 1 || i > n.rank()) throw IndexError("A index out of range");
  const std::int64_t twoe = 2 * ctx.e();
  Val best = Val::half(m.R(i + 1) - n.R(i) + twoe);
  best = std::min(best, Val::of(m.R(i + 1) - n.R(i)) +
                            d_bracket_pair(m, n, ctx.neg_one_class(), i + 1, i - 1));
  if (i >= 2 && i <= m.rank() - 2) {
    best = std::min(best,
                    Val::of(m.R(i + 1) + m.R(i + 2) - n.R(i - 1) - n.R(i)) +
                        d_bracket_pair(m, n, ctx.trivial_class(), i + 2, i - 2));
  }
  return best;
}

}  // namespace dyadic
