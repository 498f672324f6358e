// Acceptance gate: one PASS/FAIL line per criterion, exit 0 only when all
// eleven pass. Every randomized criterion prints its fixed seed.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dyadic/bong.h"
#include "dyadic/errors.h"
#include "dyadic/field.h"
#include "dyadic/json_io.h"
#include "dyadic/represent.h"
#include "dyadic/space.h"
#include "dyadic/universal.h"
#include "oracles.h"

using namespace dyadic;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int g_failures = 0;

void note(Outcome& o, const std::string& msg) {
  o.pass = false;
  if (o.detail.size() > 600) return;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += msg;
}

template <class Fn>
void criterion(int idx, const std::string& label, double budget_s, Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& ex) {
    o.pass = false;
    o.detail = std::string("exception: ") + ex.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0 && secs > budget_s) {
    o.pass = false;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += "exceeded time budget of " + std::to_string(budget_s) + "s";
  }
  if (!o.pass) ++g_failures;
  std::printf("%s %2d. %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", idx, label.c_str(), secs,
              o.detail.empty() ? "" : " -- ", o.detail.c_str());
  std::fflush(stdout);
}

const std::vector<std::pair<int, int>>& fields() {
  static const std::vector<std::pair<int, int>> fs = {{1, 1}, {2, 1}, {1, 2}};
  return fs;
}

std::string field_tag(int e, int f) {
  return "(" + std::to_string(e) + "," + std::to_string(f) + ")";
}

// Expected R-sequence of the degree-n testing lattice labelled (nu, c),
// mirroring the block structure the generator must reproduce.
std::vector<std::int64_t> expected_entry_r(int e, int n, int nu, const SquareClass& c) {
  std::vector<std::int64_t> s(static_cast<std::size_t>(n));
  auto alternate = [&](int up_to) {
    for (int i = 1; i <= up_to; ++i) s[i - 1] = (i % 2 == 1) ? 0 : -2 * e;
  };
  bool unit = c.parity() == 0;
  bool special = unit && (c.is_trivial() || c.dval() == Val::of(2 * e));
  if (n % 2 == 0) {
    if (special) {
      if (nu == 1) {
        alternate(n);
      } else {
        alternate(n - 2);
        s[n - 2] = 1;
        s[n - 1] = 1 - 2 * e;
      }
    } else {
      alternate(n - 1);
      s[n - 1] = 1 - (unit ? c.dval().as_integer() : 0);
    }
  } else {
    if (unit) {
      alternate(n);
      if (nu == 2) s[n - 2] = 2 - 2 * e;
    } else {
      alternate(n - 1);
      s[n - 1] = 1;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// criterion bodies

Outcome c1_class_counts() {
  Outcome o;
  struct Row {
    int e, f, units;
  };
  for (Row row : {Row{1, 1, 4}, Row{2, 1, 8}, Row{1, 2, 8}}) {
    auto t0 = std::chrono::steady_clock::now();
    auto ctxp = make_field(row.e, row.f);
    int u = ctxp->unit_class_count();
    int all = ctxp->class_count();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (u != row.units || all != 2 * row.units)
      note(o, field_tag(row.e, row.f) + " got units=" + std::to_string(u) +
                  " classes=" + std::to_string(all));
    if (secs > 1.0) note(o, field_tag(row.e, row.f) + " took over 1s");
  }
  return o;
}

Outcome c2_testing_cardinalities() {
  Outcome o;
  struct Row {
    int e, f, n, want;
  };
  for (Row row : {Row{1, 1, 2, 15}, Row{1, 1, 3, 16}, Row{1, 1, 4, 16}, Row{1, 1, 5, 16},
                  Row{2, 1, 2, 31}, Row{2, 1, 3, 32}, Row{1, 2, 2, 31}, Row{1, 2, 3, 32}}) {
    auto ctxp = make_field(row.e, row.f);
    int got = static_cast<int>(testing_set(*ctxp, row.n).size());
    if (got != row.want)
      note(o, field_tag(row.e, row.f) + " n=" + std::to_string(row.n) + " got " +
                  std::to_string(got) + " want " + std::to_string(row.want));
  }
  return o;
}

Outcome c3_r_tables() {
  Outcome o;
  for (auto [e, f] : fields()) {
    auto ctxp = make_field(e, f);
    const FieldContext& ctx = *ctxp;
    for (int n = 2; n <= 5; ++n) {
      for (const auto& ent : testing_set(ctx, n)) {
        auto want = expected_entry_r(e, n, ent.nu, ent.c);
        bool ok = ent.lattice.rank() == n;
        for (int i = 1; ok && i <= n; ++i) ok = ent.lattice.R(i) == want[i - 1];
        if (!ok)
          note(o, field_tag(e, f) + " n=" + std::to_string(n) + " nu=" +
                      std::to_string(ent.nu) + " c=" + ent.c.id());
      }
    }
  }
  return o;
}

Outcome c4_quaternary() {
  Outcome o;
  const std::int64_t seed = 464646;
  for (auto [e, f] : fields()) {
    auto ctxp = make_field(e, f);
    const FieldContext& ctx = *ctxp;
    BongLattice h2 = concat(hyperbolic_lattice(ctx), hyperbolic_lattice(ctx));
    BongLattice aa = concat(a22rho_lattice(ctx), a22rho_lattice(ctx));
    BongLattice ha = concat(hyperbolic_lattice(ctx), a22rho_lattice(ctx));
    BongLattice hpa = concat(hyperbolic_lattice(ctx), pi_a22rho_lattice(ctx));
    if (!quaternary_2universal(h2)) note(o, field_tag(e, f) + " H+H not universal");
    if (!quaternary_2universal(aa)) note(o, field_tag(e, f) + " rho-pair not universal");
    bool aa_r = aa.R(1) == 0 && aa.R(2) == -2 * e && aa.R(3) == 0 && aa.R(4) == -2 * e;
    if (!aa_r) note(o, field_tag(e, f) + " rho-pair R-sequence wrong");
    if (quaternary_2universal(ha)) note(o, field_tag(e, f) + " H+rho-block claimed universal");
    if (quaternary_2universal(hpa))
      note(o, field_tag(e, f) + " H+pi-rho-block claimed universal");
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed) + 97u * e + f);
    for (int k = 0; k < 100; ++k) {
      BongLattice L = sample_lattice(ctx, 4, 2 * e + 2, rng);
      bool direct = quaternary_2universal(L);
      bool inv = decide_universal(L, 2, Method::kThm11).universal;
      if (direct != inv) {
        note(o, field_tag(e, f) + " k=" + std::to_string(k) + " routes disagree");
        break;
      }
    }
  }
  o.detail = o.pass ? "seed=" + std::to_string(seed) : o.detail;
  return o;
}

// Shared corpus for criteria 5 and 6: 500 lattices per field and degree,
// ranks n+2 .. n+5, derived from one printed seed.
constexpr std::int64_t kCorpusSeed = 20260814;
constexpr int kCorpusCount = 500;

BongLattice corpus_lattice(const FieldContext& ctx, int n, int k) {
  std::uint64_t mix = static_cast<std::uint64_t>(kCorpusSeed) +
                      1000003ull * static_cast<std::uint64_t>(100 * ctx.e() + ctx.f()) +
                      101ull * static_cast<std::uint64_t>(n);
  std::seed_seq sq{static_cast<unsigned>(mix & 0xffffffffu), static_cast<unsigned>(mix >> 32),
                   static_cast<unsigned>(k)};
  std::mt19937_64 rng(sq);
  return sample_lattice(ctx, n + 2 + (k % 4), 2 * ctx.e() + 3, rng);
}

Outcome c5_formulations() {
  Outcome o;
  for (auto [e, f] : fields()) {
    auto t0 = std::chrono::steady_clock::now();
    auto ctxp = make_field(e, f);
    const FieldContext& ctx = *ctxp;
    for (int n = 2; n <= 5; ++n) {
      Method m2 = n % 2 ? Method::kOdd51 : Method::kEven41;
      Method m3 = n % 2 ? Method::kOdd53 : Method::kEven47;
      for (int k = 0; k < kCorpusCount; ++k) {
        BongLattice L = corpus_lattice(ctx, n, k);
        bool v1 = decide_universal(L, n, Method::kThm11).universal;
        bool v2 = decide_universal(L, n, m2).universal;
        bool v3 = decide_universal(L, n, m3).universal;
        if (v1 != v2 || v1 != v3) {
          note(o, field_tag(e, f) + " n=" + std::to_string(n) + " k=" + std::to_string(k) +
                      " verdicts " + std::to_string(v1) + std::to_string(v2) +
                      std::to_string(v3));
          break;
        }
      }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > 120.0) note(o, field_tag(e, f) + " exceeded 2min");
  }
  if (o.pass)
    o.detail = "seed=" + std::to_string(kCorpusSeed) + " count=" + std::to_string(kCorpusCount) +
               " per field and degree";
  return o;
}

Outcome c6_testing_route() {
  Outcome o;
  for (auto [e, f] : fields()) {
    auto ctxp = make_field(e, f);
    const FieldContext& ctx = *ctxp;
    for (int n = 2; n <= 5; ++n) {
      for (int k = 0; k < kCorpusCount; ++k) {
        BongLattice L = corpus_lattice(ctx, n, k);
        bool v1 = decide_universal(L, n, Method::kThm11).universal;
        bool v4 = decide_universal(L, n, Method::kTestingSet).universal;
        if (v1 != v4) {
          note(o, field_tag(e, f) + " n=" + std::to_string(n) + " k=" + std::to_string(k) +
                      " classification=" + std::to_string(v1) +
                      " testing=" + std::to_string(v4));
          break;
        }
      }
    }
  }
  if (o.pass)
    o.detail = "seed=" + std::to_string(kCorpusSeed) + ", same corpus as criterion 5";
  return o;
}

Outcome c7_minimality() {
  Outcome o;
  auto ctxp = make_field(1, 1);
  for (int n : {2, 3}) {
    std::string why;
    if (!minimality_check(*ctxp, n, &why))
      note(o, "degree " + std::to_string(n) + ": " + why);
  }
  return o;
}

Outcome c8_sharp_duality() {
  Outcome o;
  for (auto [e, f] : fields()) {
    auto ctxp = make_field(e, f);
    const FieldContext& ctx = *ctxp;
    for (int parity = 0; parity < 2; ++parity) {
      for (int i = 0; i < ctx.unit_class_count(); ++i) {
        SquareClass c = ctx.unit_class(i, parity);
        if (c.is_trivial() || c == ctx.delta_class()) continue;
        FieldElement rep = c.rep();
        Val d = ctx.defect_order(rep);
        FieldElement s = ctx.sharp(rep);
        if (ctx.defect_order(s) != Val::of(2 * e) - d)
          note(o, field_tag(e, f) + " c=" + c.id() + " sharp defect wrong");
        if (ctx.hilbert(s, rep) != -1)
          note(o, field_tag(e, f) + " c=" + c.id() + " (sharp,c) != -1");
      }
    }
  }
  return o;
}

Outcome c9_hilbert_laws() {
  Outcome o;
  for (auto [e, f] : fields()) {
    auto ctxp = make_field(e, f);
    const FieldContext& ctx = *ctxp;
    std::vector<SquareClass> cl;
    for (int parity = 0; parity < 2; ++parity)
      for (int i = 0; i < ctx.unit_class_count(); ++i) cl.push_back(ctx.unit_class(i, parity));
    for (const auto& a : cl) {
      SquareClass nega = ctx.class_mul(a, ctx.neg_one_class());
      if (ctx.hilbert(a, nega) != 1) note(o, field_tag(e, f) + " (a,-a) != 1 at " + a.id());
      for (const auto& b : cl) {
        int ab = ctx.hilbert(a, b);
        if (ab != ctx.hilbert(b, a)) note(o, field_tag(e, f) + " symmetry fails");
        if (ab != ctx.hilbert_by_table(a, b))
          note(o, field_tag(e, f) + " table route disagrees at (" + a.id() + "," + b.id() + ")");
        for (const auto& c : cl)
          if (ctx.hilbert(ctx.class_mul(a, b), c) != ctx.hilbert(a, c) * ctx.hilbert(b, c))
            note(o, field_tag(e, f) + " bimultiplicativity fails");
      }
    }
  }
  // base-field closed form
  auto q2p = make_field(1, 1);
  const FieldContext& q2 = *q2p;
  const int reps[8] = {1, 3, 5, 7, 2, 6, 10, 14};
  for (int a : reps)
    for (int b : reps) {
      int lib = q2.hilbert(q2.class_of(q2.from_int(a)), q2.class_of(q2.from_int(b)));
      if (lib != oracle::hilbert_closed_form_q2(a, b))
        note(o, "closed form disagrees at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  return o;
}

Outcome c10_defect_spots() {
  Outcome o;
  auto ctxp = make_field(1, 1);
  const FieldContext& ctx = *ctxp;
  struct Spot {
    int c;
    int want;  // oracle convention: relative order, oracle::kInf for infinity
  };
  for (Spot s : {Spot{3, 1}, Spot{7, 1}, Spot{-1, 1}, Spot{5, 2}, Spot{-3, 2}, Spot{2, 0},
                 Spot{17, oracle::kInf}}) {
    // the frozen mod-64 oracle must agree with the documented value first
    int oracle_d = oracle::defect_q2(s.c);
    if (oracle_d != s.want) {
      note(o, "oracle value for " + std::to_string(s.c) + " is " + std::to_string(oracle_d));
      continue;
    }
    Val lib = ctx.defect_order(ctx.from_int(s.c));
    Val want = s.want == oracle::kInf ? Val::inf() : Val::of(s.want);
    if (lib != want) note(o, "library d(" + std::to_string(s.c) + ") = " + lib.str());
  }
  return o;
}

// Property suite helpers for criterion 11.
void check_lattice_properties(const FieldContext& ctx, const BongLattice& L, Outcome& o,
                              const std::string& where) {
  const int m = L.rank();
  const int e = ctx.e();
  const SquareClass neg = ctx.neg_one_class();
  auto d_elem = [&](const FieldElement& x) { return ctx.defect_order(x); };

  // monotone combinations of R and alpha
  for (int i = 1; i + 1 <= m - 1; ++i) {
    if (!(Val::of(L.R(i)) + L.alpha(i) <= Val::of(L.R(i + 1)) + L.alpha(i + 1)))
      note(o, where + " R+alpha not nondecreasing at " + std::to_string(i));
    if (!(L.alpha(i) - L.R(i + 1) >= L.alpha(i + 1) - L.R(i + 2)))
      note(o, where + " alpha-R not nonincreasing at " + std::to_string(i));
  }
  for (int i = 1; i <= m - 1; ++i)
    for (int j = i + 1; j <= m - 1; ++j)
      if (L.R(i) + L.R(i + 1) == L.R(j) + L.R(j + 1) &&
          Val::of(L.R(i)) + L.alpha(i) != Val::of(L.R(j)) + L.alpha(j))
        note(o, where + " equal norm sums but unequal R+alpha at (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");

  // pointwise alpha laws
  for (int i = 1; i <= m - 1; ++i) {
    Val a = L.alpha(i);
    std::int64_t dd = L.R(i + 1) - L.R(i);
    std::string at = where + " i=" + std::to_string(i);
    if (a < Val::of(0)) note(o, at + " alpha negative");
    if (a <= Val::of(2 * e) && !a.is_integer()) note(o, at + " alpha fractional below 2e");
    if ((a == Val::of(0)) != (dd == -2 * e)) note(o, at + " alpha zero law");
    int lhs = dd > 2 * e ? 1 : (dd == 2 * e ? 0 : -1);
    int rhs = a > Val::of(2 * e) ? 1 : (a == Val::of(2 * e) ? 0 : -1);
    if (lhs != rhs) note(o, at + " alpha trichotomy");
    if (dd <= 2 * e) {
      if (a < Val::of(dd)) note(o, at + " alpha below R-difference");
      bool eq = a == Val::of(dd);
      bool expect_eq = dd == 2 * e || ((dd % 2 + 2) % 2 == 1);
      if (eq != expect_eq) note(o, at + " alpha equality law");
    }
    if (dd >= 2 * e || dd == -2 * e || dd == 2 - 2 * e || dd == 2 * e - 2)
      if (a != Val::half(dd + 2 * e)) note(o, at + " alpha midpoint law");
    Val db = L.d_bracket(neg, i, i + 1);
    if (a == Val::of(0) && db < Val::of(2 * e)) note(o, at + " zero alpha needs defect >= 2e");
    if (a == Val::of(1)) {
      bool shape = (dd % 2 == 0 && 2 - 2 * e <= dd && dd <= 0) || dd == 1;
      if (!shape) note(o, at + " alpha one R-difference shape");
      if (db < Val::of(1 - dd)) note(o, at + " alpha one lower bound");
      if (dd != 2 - 2 * e && db != Val::of(1 - dd)) note(o, at + " alpha one equality");
    }
    if (2 - 2 * e < dd && dd <= 0)
      if ((a == Val::of(1)) != (db == Val::of(1 - dd))) note(o, at + " alpha one criterion");
    // odd differences must be positive; drops of 2e pin the binary block
    if ((dd % 2 + 2) % 2 == 1 && dd <= 0) note(o, at + " odd nonpositive R-difference");
    if (dd == -2 * e) {
      if (d_elem(ctx.from_int(-1) * L.a(i) * L.a(i + 1)) < Val::of(2 * e))
        note(o, at + " plain defect under 2e at a drop");
      SpaceInv pair = space_of_diagonal(ctx, {L.a(i), L.a(i + 1)});
      SpaceInv split = hyperbolic_space(ctx, 1);
      SpaceInv twisted = space_of_diagonal(
          ctx, {ctx.pi_pow(L.R(i)), ctx.from_int(-1) * ctx.delta() * ctx.pi_pow(L.R(i))});
      if (!is_isometric(pair, split) && !is_isometric(pair, twisted))
        note(o, at + " drop block is neither split nor twisted");
    }
  }

  // integral chain laws
  for (int i = 1; i <= m; ++i) {
    if (i % 2 == 1 && L.R(i) < 0) note(o, where + " odd-position norm negative");
    if (i % 2 == 0 && L.R(i) < -2 * e) note(o, where + " even-position norm under -2e");
    if (i + 2 <= m && L.R(i) > L.R(i + 2)) note(o, where + " same-parity chain decreasing");
  }
  for (int j = 1; j <= m; j += 2)
    if (L.R(j) == 0)
      for (int i = 1; i <= j; ++i) {
        if (i % 2 == 1 && L.R(i) != 0) note(o, where + " zero chain broken");
        if (L.R(i) % 2 != 0) note(o, where + " odd norm below a zero");
      }
  for (int j = 2; j <= m; j += 2)
    if (L.R(j) == -2 * e) {
      for (int i = 2; i <= j; i += 2) {
        if (L.R(i - 1) != 0 || L.R(i) != -2 * e) note(o, where + " deep chain broken");
        if (L.d_bracket(neg, i - 1, i) < Val::of(2 * e))
          note(o, where + " deep chain bracket small");
        if (d_elem(ctx.from_int(-1) * L.a(i - 1) * L.a(i)) < Val::of(2 * e))
          note(o, where + " deep chain plain defect small");
      }
      SquareClass sign = (j / 2) % 2 == 1 ? neg : ctx.trivial_class();
      if (L.d_bracket(sign, 1, j) < Val::of(2 * e))
        note(o, where + " signed prefix bracket small");
      SpaceInv pre = L.prefix_space(j);
      SpaceInv hs = hyperbolic_space(ctx, j / 2);
      SpaceInv alt = space_sum(ctx, hyperbolic_space(ctx, (j - 2) / 2),
                               space_of_diagonal(ctx, {ctx.one(), ctx.from_int(-1) * ctx.delta()}));
      if (!is_isometric(pre, hs) && !is_isometric(pre, alt))
        note(o, where + " deep prefix space shape");
      if (j + 1 <= m && L.R(j + 1) % 2 == 0) {
        SquareClass ca = ctx.class_of(L.a(j + 1));
        SpaceInv w1 = space_sum(ctx, hs, line_space(ctx, ca));
        SpaceInv w2 = space_sum(ctx, hs, line_space(ctx, ctx.class_mul(ca, ctx.delta_class())));
        SpaceInv pre1 = L.prefix_space(j + 1);
        if (!is_isometric(pre1, w1) && !is_isometric(pre1, w2))
          note(o, where + " extended prefix space shape");
      }
    }
}

Outcome c11_property_suite() {
  Outcome o;
  const std::int64_t seed = 777000;
  for (auto [e, f] : fields()) {
    auto ctxp = make_field(e, f);
    const FieldContext& ctx = *ctxp;
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed) + 131u * e + f);
    for (int k = 0; k < 1000; ++k) {
      // construction itself re-derives every alpha by two formulas and hard
      // faults on mismatch
      BongLattice L = sample_lattice(ctx, 2 + (k % 8), 2 * e + 3, rng);
      std::string where = field_tag(e, f) + " k=" + std::to_string(k);
      check_lattice_properties(ctx, L, o, where);
      if (!o.pass && o.detail.size() > 500) return o;
    }
  }
  if (o.pass) o.detail = "seed=" + std::to_string(seed) + ", 1000 lattices per field";
  return o;
}

}  // namespace

int main() {
  std::printf("acceptance gate: exact-arithmetic dyadic universality library\n");
  criterion(1, "square-class counts 8/16/16 with 4/8/8 units", 5.0, c1_class_counts);
  criterion(2, "testing-set cardinalities 15/16 and 31/32", 5.0, c2_testing_cardinalities);
  criterion(3, "testing-set R-sequences match the block tables", 30.0, c3_r_tables);
  criterion(4, "quaternary verdicts and dual-route agreement on 100 samples", 10.0,
            c4_quaternary);
  criterion(5, "three formulations agree on 500-lattice corpora per field and degree", 360.0,
            c5_formulations);
  criterion(6, "classification route equals testing-set route on the same corpora", 600.0,
            c6_testing_route);
  criterion(7, "testing sets are minimal at degrees 2 and 3 over the base field", 60.0,
            c7_minimality);
  criterion(8, "sharp duality pairs defects to 2e with symbol -1", 30.0, c8_sharp_duality);
  criterion(9, "Hilbert symbol laws on all class pairs plus base-field closed form", 30.0,
            c9_hilbert_laws);
  criterion(10, "defect spot values confirmed by the mod-64 oracle", 5.0, c10_defect_spots);
  criterion(11, "R/alpha invariant property suite on 1000 sampled lattices per field", 300.0,
            c11_property_suite);
  if (g_failures == 0) {
    std::printf("all 11 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", g_failures);
  return 1;
}
