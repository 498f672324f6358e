#include "doctest.h"

#include <vector>

#include "dyadic/errors.h"
#include "dyadic/field.h"
#include "dyadic/space.h"

using namespace dyadic;

namespace {

std::vector<FieldElement> probes(const FieldContext& ctx) {
  std::vector<FieldElement> out;
  for (int parity = 0; parity < 2; ++parity)
    for (int i = 0; i < ctx.unit_class_count(); ++i)
      out.push_back(ctx.unit_class(i, parity).rep());
  return out;
}

}  // namespace

TEST_CASE("hyperbolic planes have trivial-ish invariants and absorb sums") {
  for (auto [e, f] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    auto ctxp = make_field(e, f);
    const FieldContext& ctx = *ctxp;
    CAPTURE(e);
    CAPTURE(f);
    SpaceInv h = hyperbolic_space(ctx, 1);
    CHECK(h.dim == 2);
    CHECK(h.det == ctx.neg_one_class());
    SpaceInv h2 = hyperbolic_space(ctx, 2);
    CHECK(is_isometric(space_sum(ctx, h, h), h2));
    // H = [1, -1] as a diagonal form
    SpaceInv d = space_of_diagonal(ctx, {ctx.one(), ctx.from_int(-1)});
    CHECK(is_isometric(d, h));
    CHECK(is_isotropic(ctx, h));
  }
}

TEST_CASE("diagonal invariants are insensitive to square scalings and order") {
  for (auto [e, f] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    auto ctxp = make_field(e, f);
    const FieldContext& ctx = *ctxp;
    CAPTURE(e);
    CAPTURE(f);
    std::vector<FieldElement> diag = {ctx.from_int(3), ctx.pi(), ctx.delta() * ctx.pi_pow(2)};
    SpaceInv v = space_of_diagonal(ctx, diag);
    CHECK(v.dim == 3);
    std::vector<FieldElement> scaled = {diag[1] * ctx.from_int(9), diag[0].mul_pi_pow(2),
                                        diag[2] * (ctx.one() + ctx.pi()).square()};
    CHECK(is_isometric(space_of_diagonal(ctx, scaled), v));
    CHECK(v.det == ctx.class_of(diag[0] * diag[1] * diag[2]));
  }
}

TEST_CASE("isotropy by dimension") {
  for (auto [e, f] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    auto ctxp = make_field(e, f);
    const FieldContext& ctx = *ctxp;
    CAPTURE(e);
    CAPTURE(f);
    // lines are never isotropic
    for (const auto& x : probes(ctx)) CHECK_FALSE(is_isotropic(ctx, space_of_diagonal(ctx, {x})));
    // binary: isotropic exactly when the determinant class is -1
    for (const auto& x : probes(ctx))
      for (const auto& y : probes(ctx)) {
        SpaceInv v = space_of_diagonal(ctx, {x, y});
        CHECK(is_isotropic(ctx, v) == (v.det == ctx.neg_one_class()));
      }
    // the unique anisotropic quaternary space
    SpaceInv a4 = space_of_diagonal(
        ctx, {ctx.one(), ctx.delta() * ctx.from_int(-1), ctx.pi(),
              ctx.delta() * ctx.pi() * ctx.from_int(-1)});
    CHECK_FALSE(is_isotropic(ctx, a4));
    // the two binary halves have value sets of opposite valuation parity,
    // and the determinant collapses to the trivial class
    CHECK(a4.det.is_trivial());
    CHECK_FALSE(is_isometric(a4, hyperbolic_space(ctx, 2)));
    // and anything of dimension 5 is isotropic
    for (const auto& x : probes(ctx)) {
      SpaceInv v5 = space_sum(ctx, a4, line_space(ctx, ctx.class_of(x)));
      CHECK(is_isotropic(ctx, v5));
    }
  }
}

TEST_CASE("representation of subspaces") {
  for (auto [e, f] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    auto ctxp = make_field(e, f);
    const FieldContext& ctx = *ctxp;
    CAPTURE(e);
    CAPTURE(f);
    SpaceInv h = hyperbolic_space(ctx, 1);
    SpaceInv a4 = space_of_diagonal(
        ctx, {ctx.one(), ctx.delta() * ctx.from_int(-1), ctx.pi(),
              ctx.delta() * ctx.pi() * ctx.from_int(-1)});
    // the anisotropic quaternary space contains no hyperbolic plane
    CHECK_FALSE(space_represents(ctx, h, a4));
    // every space represents itself; H represents every line
    CHECK(space_represents(ctx, a4, a4));
    for (const auto& x : probes(ctx)) {
      SpaceInv l = space_of_diagonal(ctx, {x});
      CHECK(space_represents(ctx, l, h));
      // codimension >= 3 always represents (dim w + 3 <= dim v forces it)
      SpaceInv v = space_sum(ctx, space_sum(ctx, l, a4), line_space(ctx, ctx.trivial_class()));
      CHECK(space_represents(ctx, space_of_diagonal(ctx, {x, x * ctx.from_int(3)}), v));
    }
    // n-universality of spaces: H^n is n-universal, H is not 2-universal
    CHECK(space_n_universal(ctx, hyperbolic_space(ctx, 2), 2));
    CHECK_FALSE(space_n_universal(ctx, h, 2));
    CHECK(space_n_universal(ctx, h, 1));
  }
}

TEST_CASE("labelled spaces: the two members of a label share det and differ in Hasse") {
  for (auto [e, f] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    auto ctxp = make_field(e, f);
    const FieldContext& ctx = *ctxp;
    CAPTURE(e);
    CAPTURE(f);
    for (int n : {2, 3, 4, 5}) {
      for (int parity = 0; parity < 2; ++parity)
        for (int i = 0; i < ctx.unit_class_count(); ++i) {
          SquareClass c = ctx.unit_class(i, parity);
          if (n == 2 && c.is_trivial()) {
            CHECK_THROWS_AS(w_space(ctx, 2, n, c), dyadic::UndefinedSpace);
            continue;
          }
          SpaceInv w1 = w_space(ctx, 1, n, c);
          SpaceInv w2 = w_space(ctx, 2, n, c);
          CAPTURE(n);
          CAPTURE(c.id());
          CHECK(w1.dim == n);
          CHECK(w2.dim == n);
          CHECK(w1.det == w2.det);
          CHECK(w1.hasse == -w2.hasse);
          CHECK_FALSE(is_isometric(w1, w2));
        }
    }
  }
}
