#include "dyadic/space.h"

namespace dyadic {

SpaceInv space_of_diagonal(const FieldContext& ctx, const std::vector<FieldElement>& diag) {
  SpaceInv v;
  v.dim = static_cast<int>(diag.size());
  v.det = ctx.trivial_class();
  v.hasse = 1;
  std::vector<SquareClass> cls;
  cls.reserve(diag.size());
  for (const auto& a : diag) {
    if (a.is_exact_zero()) throw BadParams("diagonal entries must be nonzero");
    cls.push_back(ctx.class_of(a));
  }
  for (std::size_t i = 0; i < cls.size(); ++i) {
    v.det = ctx.class_mul(v.det, cls[i]);
    for (std::size_t j = i + 1; j < cls.size(); ++j) v.hasse *= ctx.hilbert(cls[i], cls[j]);
  }
  return v;
}

SpaceInv space_sum(const FieldContext& ctx, const SpaceInv& a, const SpaceInv& b) {
  SpaceInv v;
  v.dim = a.dim + b.dim;
  v.det = ctx.class_mul(a.det, b.det);
  v.hasse = a.hasse * b.hasse * ctx.hilbert(a.det, b.det);
  return v;
}

SpaceInv line_space(const FieldContext& ctx, const SquareClass& c) {
  (void)ctx;
  return SpaceInv{1, c, 1};
}

SpaceInv hyperbolic_space(const FieldContext& ctx, int planes) {
  if (planes < 0) throw BadParams("negative number of hyperbolic planes");
  SpaceInv plane{2, ctx.neg_one_class(), 1};
  SpaceInv v{0, ctx.trivial_class(), 1};
  for (int i = 0; i < planes; ++i) v = space_sum(ctx, v, plane);
  return v;
}

bool is_isometric(const SpaceInv& a, const SpaceInv& b) {
  return a.dim == b.dim && a.det == b.det && a.hasse == b.hasse;
}

bool is_isotropic(const FieldContext& ctx, const SpaceInv& v) {
  if (v.dim < 0) throw BadParams("negative dimension");
  if (v.dim <= 1) return false;
  if (v.dim == 2) return v.det == ctx.neg_one_class();
  if (v.dim == 3) {
    // Ternary spaces of a fixed det form two Hasse classes; the isotropic one
    // is H plus the line fixing the det.
    SpaceInv split = space_of_diagonal(
        ctx, {ctx.one(), -ctx.one(), -v.det.rep()});
    return v.hasse == split.hasse;
  }
  if (v.dim == 4) {
    if (!v.det.is_trivial()) return true;
    SpaceInv aniso = space_of_diagonal(
        ctx, {ctx.one(), -ctx.delta(), ctx.pi(), -ctx.delta() * ctx.pi()});
    return v.hasse != aniso.hasse;
  }
  return true;
}

bool space_represents(const FieldContext& ctx, const SpaceInv& w, const SpaceInv& v) {
  int codim = v.dim - w.dim;
  if (codim < 0) return false;
  if (codim == 0) return is_isometric(v, w);
  SquareClass c = ctx.class_mul(w.det, v.det);
  if (codim == 1) return is_isometric(v, space_sum(ctx, w, line_space(ctx, c)));
  if (codim == 2) {
    // The complement is binary with det c; its Hasse symbol is free to match
    // unless c = -1, where the hyperbolic plane is the only choice.
    if (c != ctx.neg_one_class()) return true;
    return is_isometric(v, space_sum(ctx, w, hyperbolic_space(ctx, 1)));
  }
  return true;  // dim >= 3 complements realize every (det, hasse) pair
}

bool space_n_universal(const FieldContext& ctx, const SpaceInv& v, int n) {
  if (n < 1) throw BadParams("universality degree must be positive");
  if (v.dim >= n + 3) return true;
  // Below n+3 the only universal spaces are the hyperbolic plane and the
  // isotropic ternaries for lines, and H^2 for binaries.
  if (n == 1 && v.dim == 2) return is_isometric(v, hyperbolic_space(ctx, 1));
  if (n == 1 && v.dim == 3) return is_isotropic(ctx, v);
  if (n == 2 && v.dim == 4) return is_isometric(v, hyperbolic_space(ctx, 2));
  return false;
}

SpaceInv w_space(const FieldContext& ctx, int nu, int n, const SquareClass& c) {
  if (nu != 1 && nu != 2) throw BadParams("nu must be 1 or 2");
  if (n < 2) throw BadParams("spaces are labeled for n >= 2 only");
  const FieldElement one = ctx.one();
  const FieldElement delta = ctx.delta();
  const FieldElement pi = ctx.pi();
  auto with_planes = [&](int planes, const std::vector<FieldElement>& tail) {
    return space_sum(ctx, hyperbolic_space(ctx, planes), space_of_diagonal(ctx, tail));
  };
  if (n % 2 == 0) {
    if (c.parity() == 0 && c.is_trivial()) {
      if (nu == 1) return hyperbolic_space(ctx, n / 2);
      if (n == 2) throw UndefinedSpace("no second space for the trivial label at n = 2");
      return with_planes((n - 4) / 2, {one, -delta, pi, -delta * pi});
    }
    if (c.parity() == 0 && c == ctx.delta_class()) {
      if (nu == 1) return with_planes((n - 2) / 2, {one, -delta});
      return with_planes((n - 2) / 2, {pi, -delta * pi});
    }
    if (c.parity() == 0) {
      FieldElement d = c.rep();
      if (nu == 1) return with_planes((n - 2) / 2, {one, -d});
      FieldElement ds = ctx.sharp(d);
      return with_planes((n - 2) / 2, {ds, -(ds * d)});
    }
    FieldElement dp = c.rep();  // parity 1: unit times pi
    if (nu == 1) return with_planes((n - 2) / 2, {one, -dp});
    return with_planes((n - 2) / 2, {delta, -(delta * dp)});
  }
  if (c.parity() == 0) {
    FieldElement d = c.rep();
    if (nu == 1) return with_planes((n - 1) / 2, {d});
    return with_planes((n - 3) / 2, {pi, -delta * pi, delta * d});
  }
  FieldElement dp = c.rep();
  if (nu == 1) return with_planes((n - 1) / 2, {dp});
  return with_planes((n - 3) / 2, {one, -delta, delta * dp});
}

}  // namespace dyadic
