#include "doctest.h"

#include <cstdint>
#include <vector>

#include "dyadic/errors.h"
#include "dyadic/field.h"

using dyadic::FieldContext;
using dyadic::FieldElement;
using dyadic::FieldOptions;
using dyadic::make_field;
using dyadic::Val;

namespace {

// The fields exercised throughout this file.
std::vector<std::pair<int, int>> small_fields() { return {{1, 1}, {2, 1}, {1, 2}, {3, 2}}; }

}  // namespace

TEST_CASE("base field digits match plain 2-adic expansions") {
  auto ctxp = make_field(1, 1);
  const FieldContext& ctx = *ctxp;
  // 13 = 1 + 4 + 8 -> digits 1,0,1,1 at ord 0
  FieldElement x = ctx.from_int(13);
  CHECK(x.ord() == 0);
  auto d = x.rel_digits(4);
  CHECK(d == std::vector<std::uint32_t>{1, 0, 1, 1});
  // 12 = 4 * 3 -> ord 2, digits 1,1
  FieldElement y = ctx.from_int(12);
  CHECK(y.ord() == 2);
  CHECK(y.rel_digits(2) == std::vector<std::uint32_t>{1, 1});
  // negative input: -1 = ...1111
  FieldElement m = ctx.from_int(-1);
  CHECK(m.ord() == 0);
  CHECK(m.rel_digits(5) == std::vector<std::uint32_t>{1, 1, 1, 1, 1});
}

TEST_CASE("inverse of 3 over the base field is the expansion of 1/3") {
  auto ctxp = make_field(1, 1);
  const FieldContext& ctx = *ctxp;
  // 3 * 11 = 33 = 1 + 32, so 1/3 = 11 mod 32
  FieldElement inv3 = ctx.from_int(3).inv();
  CHECK(inv3.equals_to_digits(ctx.from_int(11), 5));
  CHECK_FALSE(inv3.equals_to_digits(ctx.from_int(11), 6));
}

TEST_CASE("ring laws hold to trusted precision") {
  for (auto [e, f] : small_fields()) {
    auto ctxp = make_field(e, f);
    const FieldContext& ctx = *ctxp;
    CAPTURE(e);
    CAPTURE(f);
    std::vector<FieldElement> xs = {
        ctx.from_int(1),  ctx.from_int(3),  ctx.from_int(-5), ctx.pi(),
        ctx.rho(),        ctx.from_int(7) * ctx.pi_pow(2),    ctx.delta(),
    };
    if (f > 1) xs.push_back(ctx.lift_residue(2) + ctx.pi());
    int probe = 2 * e + 4;
    // apparent zeros (e.g. 3 + delta over Q2) carry no comparable digits
    auto same = [&](const FieldElement& x, const FieldElement& y) {
      if (x.is_zero_like() || y.is_zero_like())
        return x.is_zero_like() && y.is_zero_like();
      return x.equals_to_digits(y, probe);
    };
    for (const auto& a : xs) {
      for (const auto& b : xs) {
        CHECK(same(a * b, b * a));
        CHECK(same(a + b, b + a));
        for (const auto& c : xs) {
          CHECK(same((a * b) * c, a * (b * c)));
          CHECK(same(a * (b + c), a * b + a * c));
        }
      }
      // multiplicative inverse
      CHECK((a * a.inv()).equals_to_digits(ctx.one(), probe));
      // exact pi shifts preserve digits and move ord
      FieldElement s = a.mul_pi_pow(3);
      CHECK(s.ord() == a.ord() + 3);
      CHECK(s.rel_digits(probe) == a.rel_digits(probe));
      CHECK(s.mul_pi_pow(-3).equals_to_digits(a, probe));
    }
  }
}

TEST_CASE("subtraction of equal values yields a zero-like element") {
  for (auto [e, f] : small_fields()) {
    auto ctxp = make_field(e, f);
    const FieldContext& ctx = *ctxp;
    CAPTURE(e);
    CAPTURE(f);
    FieldElement x = ctx.from_int(3) * ctx.pi() + ctx.rho();
    FieldElement z = x - x;
    CHECK(z.is_zero_like());
    CHECK(ctx.zero().is_exact_zero());
    CHECK(ctx.zero().ord_val().is_inf());
    // ord of an apparent (precision-limited) zero is not trusted
    if (z.is_apparent_zero()) CHECK_THROWS_AS(z.ord(), dyadic::PrecisionLoss);
  }
}

TEST_CASE("cancellation keeps exact valuations") {
  for (auto [e, f] : small_fields()) {
    auto ctxp = make_field(e, f);
    const FieldContext& ctx = *ctxp;
    CAPTURE(e);
    CAPTURE(f);
    for (int k : {1, 2, e, 2 * e, 2 * e + 3}) {
      FieldElement x = ctx.one() + ctx.pi_pow(k);
      CHECK((x - ctx.one()).ord() == k);
    }
  }
}

TEST_CASE("2 has valuation e and integer powers compose") {
  for (auto [e, f] : small_fields()) {
    auto ctxp = make_field(e, f);
    const FieldContext& ctx = *ctxp;
    CAPTURE(e);
    CAPTURE(f);
    CHECK(ctx.from_int(2).ord() == e);
    CHECK(ctx.from_int(4).ord() == 2 * e);
    CHECK(ctx.from_int(6).ord() == e);
    CHECK((ctx.from_int(2) * ctx.from_int(2)).equals_to_digits(ctx.from_int(4), 2 * e + 4));
    CHECK(ctx.pi_pow(2 * e).is_unit() == false);
    CHECK(ctx.pi_pow(0).is_unit());
  }
}

TEST_CASE("from_digits and rel_digits are mutually inverse") {
  for (auto [e, f] : small_fields()) {
    auto ctxp = make_field(e, f);
    const FieldContext& ctx = *ctxp;
    CAPTURE(e);
    CAPTURE(f);
    std::vector<std::uint32_t> digits = {1, 0, 1};
    if (f > 1) digits = {1, 2, 3, 0, 1};
    FieldElement x = ctx.from_digits(-2, digits);
    CHECK(x.ord() == -2);
    auto back = x.rel_digits(static_cast<int>(digits.size()));
    CHECK(back == digits);
    // leading digit is the first relative digit
    CHECK(x.leading_digit() == digits[0]);
  }
}

TEST_CASE("division by zero and invalid digit data are rejected") {
  auto ctxp = make_field(2, 1);
  const FieldContext& ctx = *ctxp;
  CHECK_THROWS_AS(ctx.zero().inv(), dyadic::DivisionByZero);
  // leading zero digits shift the valuation instead of erroring
  CHECK(ctx.from_digits(0, {0, 1}).ord() == 1);
  CHECK(ctx.from_digits(0, {0, 1}).equals_to_digits(ctx.pi(), 3));
}

TEST_CASE("delta has defect order exactly 2e") {
  for (auto [e, f] : small_fields()) {
    auto ctxp = make_field(e, f);
    const FieldContext& ctx = *ctxp;
    CAPTURE(e);
    CAPTURE(f);
    CHECK(ctx.defect_order(ctx.delta()) == Val::of(2 * e));
    CHECK(ctx.defect_order(ctx.one()) == Val::inf());
    CHECK(ctx.defect_order(ctx.from_int(4)) == Val::inf());
    CHECK(ctx.is_square(ctx.from_int(9)));
    CHECK_FALSE(ctx.is_square(ctx.delta()));
    CHECK_FALSE(ctx.is_square(ctx.pi()));
  }
}

TEST_CASE("squares are recognized across valuations") {
  for (auto [e, f] : small_fields()) {
    auto ctxp = make_field(e, f);
    const FieldContext& ctx = *ctxp;
    CAPTURE(e);
    CAPTURE(f);
    std::vector<FieldElement> xs = {ctx.from_int(3), ctx.one() + ctx.pi(), ctx.rho() + ctx.from_int(5),
                                    ctx.pi_pow(-1) + ctx.one()};
    for (const auto& x : xs) {
      CHECK(ctx.is_square(x.square()));
      CHECK(ctx.is_square((x * ctx.pi()).square()));
      CHECK_FALSE(ctx.is_square(x.square() * ctx.pi()));
    }
  }
}
