#include "dyadic/universal.h"

#include <algorithm>
#include <sstream>

#include "dyadic/space.h"

namespace dyadic {

Method method_from_token(const std::string& token) {
  if (token == "thm11") return Method::kThm11;
  if (token == "even41") return Method::kEven41;
  if (token == "even47") return Method::kEven47;
  if (token == "odd51") return Method::kOdd51;
  if (token == "odd53") return Method::kOdd53;
  if (token == "testing_set") return Method::kTestingSet;
  throw InputError("unknown method token: " + token);
}

std::string method_token(Method m) {
  switch (m) {
    case Method::kThm11: return "thm11";
    case Method::kEven41: return "even41";
    case Method::kEven47: return "even47";
    case Method::kOdd51: return "odd51";
    case Method::kOdd53: return "odd53";
    case Method::kTestingSet: return "testing_set";
  }
  throw InternalFault("unhandled method");
}

namespace {

// d(-a_j a_{j+1}) for 1 <= j <= m-1.
Val dpair(const BongLattice& L, int j) {
  const FieldContext& ctx = L.ctx();
  SquareClass c = ctx.class_mul(L.prefix_class(j + 1), L.prefix_class(j - 1));
  return ctx.class_mul(ctx.neg_one_class(), c).dval();
}

// R_i = 0 for odd i and -2e for even i, over lo <= i <= hi.
bool alternating(const BongLattice& L, int lo, int hi, std::int64_t twoe) {
  for (int i = lo; i <= hi; ++i)
    if (L.R(i) != ((i % 2 == 1) ? 0 : -twoe)) return false;
  return true;
}

std::int64_t floor_div2(std::int64_t x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

bool is_even(std::int64_t x) { return x % 2 == 0; }

bool quaternary_h2_shape(const BongLattice& L) {
  const FieldContext& ctx = L.ctx();
  const std::int64_t twoe = 2 * ctx.e();
  if (L.R(1) != 0 || L.R(2) != -twoe || L.R(3) != 0 || L.R(4) != -twoe) return false;
  return is_isometric(L.space(), hyperbolic_space(ctx, 2));
}

// Shared by the even-n tail conditions: whether the lattice determines the
// stricter form of the deep-gap requirement.
bool even_gap_precond(const BongLattice& L, int n, std::int64_t twoe) {
  return n >= 4 || (n == 2 && L.prefix_class(4).dval() == Val::of(twoe));
}

UniVerdict by_thm11(const BongLattice& L, int n) {
  const FieldContext& ctx = L.ctx();
  const std::int64_t twoe = 2 * ctx.e();
  const int m = L.rank();
  if (n == 2 && m == 4)
    return {quaternary_h2_shape(L), Method::kThm11, "quaternary"};
  if (m < n + 3) return {false, Method::kThm11, "rank"};

  if (n % 2 == 0) {
    if (!alternating(L, 1, n + 1, twoe)) return {false, Method::kThm11, "pattern"};
    const std::int64_t r2 = L.R(n + 2);
    const bool r2_even_ok = is_even(r2) && r2 >= -twoe && r2 <= 0;
    if (!(r2_even_ok || r2 == 1)) return {false, Method::kThm11, "tail1"};
    if (r2_even_ok && r2 != -twoe) {
      bool ok;
      if (r2 == 2 - twoe) {
        ok = dpair(L, n + 1) == Val::of(twoe - 1) || L.R(n + 3) == 0 || L.R(n + 3) == 1;
      } else {
        ok = false;
        for (int j = n + 1; j <= m - 1 && !ok; ++j)
          if (dpair(L, j) == Val::of(1 - L.R(j + 1))) ok = true;
      }
      if (!ok) return {false, Method::kThm11, "tail1"};
    }
    if (L.R(n + 3) - r2 > twoe) {
      if (r2 != -twoe) return {false, Method::kThm11, "tail2"};
      if (even_gap_precond(L, n, twoe) && L.R(n + 3) != 1)
        return {false, Method::kThm11, "tail2"};
    }
    return {true, Method::kThm11, ""};
  }

  if (!alternating(L, 1, n, twoe)) return {false, Method::kThm11, "pattern"};
  const std::int64_t r1 = L.R(n + 1);
  const bool r1_even_ok = is_even(r1) && r1 >= -twoe && r1 <= 0;
  if (!(r1_even_ok || r1 == 1)) return {false, Method::kThm11, "tail1"};
  if (r1_even_ok && r1 >= 4 - twoe) {
    bool ok = false;
    for (int j = n; j <= m - 1 && !ok; ++j)
      if (dpair(L, j) == Val::of(1 - L.R(j + 1))) ok = true;
    if (!ok) return {false, Method::kThm11, "tail1"};
  }
  if (r1 == 1 || (r1 != -twoe && L.R(n + 2) > 1)) {
    const std::int64_t diff = L.R(n + 2) - r1;
    const std::int64_t lhs = L.R(n + 3) + L.R(n + 2) - 2 * r1;
    const std::int64_t cap = is_even(diff) ? twoe - 2 : twoe;
    const std::int64_t slack = is_even(diff) ? 1 : 0;
    bool ok = lhs <= cap;
    for (int j = n + 2; j <= m - 1 && !ok; ++j)
      if (dpair(L, j) <= Val::of(twoe + r1 - L.R(j + 1) - slack)) ok = true;
    if (!ok) return {false, Method::kThm11, "tail2"};
  }
  if (r1 == -twoe && !(L.R(n + 2) == 0 || L.R(n + 2) == 1))
    return {false, Method::kThm11, "tail3"};
  if (L.R(n + 3) - L.R(n + 2) > twoe) return {false, Method::kThm11, "tail4"};
  return {true, Method::kThm11, ""};
}

UniVerdict by_even41(const BongLattice& L, int n) {
  const FieldContext& ctx = L.ctx();
  const std::int64_t twoe = 2 * ctx.e();
  const int m = L.rank();
  if (!space_n_universal(ctx, L.space(), n)) return {false, Method::kEven41, "space"};
  if (m < n + 2 || !alternating(L, 1, n + 1, twoe)) return {false, Method::kEven41, "I1"};
  const Val a = L.alpha(n + 1);
  const bool i2 =
      a == Val::of(0) ||
      (a == Val::of(1) &&
       L.d_bracket(ctx.neg_one_class(), n + 1, n + 2) == Val::of(1 - L.R(n + 2)));
  if (!i2) return {false, Method::kEven41, "I2"};
  if (m >= n + 3 && L.R(n + 3) - L.R(n + 2) > twoe) {
    const bool ok = L.R(n + 2) == -twoe &&
                    (!even_gap_precond(L, n, twoe) || L.R(n + 3) == 1);
    if (!ok) return {false, Method::kEven41, "I3"};
  }
  return {true, Method::kEven41, ""};
}

UniVerdict by_even47(const BongLattice& L, int n) {
  const FieldContext& ctx = L.ctx();
  const std::int64_t twoe = 2 * ctx.e();
  const int m = L.rank();
  const bool quaternary = (m == n + 2 && m == 4);
  if (!(m >= n + 3 || quaternary)) return {false, Method::kEven47, "rank"};
  if (!alternating(L, 1, n + 1, twoe)) return {false, Method::kEven47, "pattern"};
  if (quaternary) {
    const bool ok =
        L.R(4) == -twoe && is_isometric(L.space(), hyperbolic_space(ctx, 2));
    return {ok, Method::kEven47, "quaternary"};
  }
  if (!(L.alpha(n + 1) <= Val::of(1))) return {false, Method::kEven47, "alpha"};
  if (L.R(n + 3) - L.R(n + 2) > twoe) {
    const bool ok = L.R(n + 2) == -twoe &&
                    (!even_gap_precond(L, n, twoe) || L.R(n + 3) == 1);
    if (!ok) return {false, Method::kEven47, "I3"};
  }
  if (L.R(n + 3) - L.R(n + 2) == twoe && L.R(n + 2) == 2 - twoe &&
      dpair(L, n + 1) != Val::of(twoe - 1))
    return {false, Method::kEven47, "corner"};
  return {true, Method::kEven47, ""};
}

// Bound on alpha_{n+2} used by both odd-n formulations.
std::int64_t odd_gap_bound(const BongLattice& L, int n, int e) {
  return 2 * (e - floor_div2(L.R(n + 2) - L.R(n + 1))) - 1;
}

UniVerdict by_odd51(const BongLattice& L, int n) {
  const FieldContext& ctx = L.ctx();
  const std::int64_t twoe = 2 * ctx.e();
  const int m = L.rank();
  if (m < n + 3) return {false, Method::kOdd51, "rank"};
  const Val a = L.alpha(n);
  if (!alternating(L, 1, n, twoe) || !(a == Val::of(0) || a == Val::of(1)))
    return {false, Method::kOdd51, "I1"};
  if (a == Val::of(0)) {
    if (!(L.R(n + 2) == 0 || L.R(n + 2) == 1)) return {false, Method::kOdd51, "I2"};
  } else if (L.R(n + 1) == 1 || L.R(n + 2) > 1) {
    if (!(L.alpha(n + 2) <= Val::of(odd_gap_bound(L, n, ctx.e()))))
      return {false, Method::kOdd51, "I2"};
  }
  if (L.R(n + 3) - L.R(n + 2) > twoe) return {false, Method::kOdd51, "I3"};
  return {true, Method::kOdd51, ""};
}

UniVerdict by_odd53(const BongLattice& L, int n) {
  const FieldContext& ctx = L.ctx();
  const std::int64_t twoe = 2 * ctx.e();
  const int m = L.rank();
  if (m < n + 3) return {false, Method::kOdd53, "rank"};
  if (!alternating(L, 1, n, twoe)) return {false, Method::kOdd53, "pattern"};
  if (L.R(n + 3) - L.R(n + 2) > twoe) return {false, Method::kOdd53, "tail"};
  const Val a = L.alpha(n);
  bool ok = false;
  if (a == Val::of(0)) {
    ok = L.R(n + 2) == 0 || L.R(n + 2) == 1;
  } else if (a == Val::of(1)) {
    ok = (L.R(n + 1) != 1 && L.R(n + 2) <= 1) ||
         L.alpha(n + 2) <= Val::of(odd_gap_bound(L, n, ctx.e()));
  }
  if (!ok) return {false, Method::kOdd53, "main"};
  return {true, Method::kOdd53, ""};
}

UniVerdict by_testing_set(const BongLattice& L, int n) {
  auto set = testing_set(L.ctx(), n);
  for (const auto& entry : set) {
    const bool ok = entry.lattice.rank() <= L.rank() &&
                    represents(entry.lattice, L).represented;
    if (!ok) {
      std::string w = "nu=" + std::to_string(entry.nu) + ",c=" + entry.c.id();
      return {false, Method::kTestingSet, w};
    }
  }
  return {true, Method::kTestingSet, ""};
}

}  // namespace

UniVerdict decide_universal(const BongLattice& L, int n, Method method) {
  if (n < 2) throw BadParams("universality needs n >= 2");
  if (L.R(1) < 0) throw NotIntegral("lattice must be integral");
  switch (method) {
    case Method::kThm11:
      return by_thm11(L, n);
    case Method::kEven41:
      if (n % 2 != 0) throw ParityMismatch("method even41 needs even n");
      return by_even41(L, n);
    case Method::kEven47:
      if (n % 2 != 0) throw ParityMismatch("method even47 needs even n");
      return by_even47(L, n);
    case Method::kOdd51:
      if (n % 2 == 0) throw ParityMismatch("method odd51 needs odd n");
      return by_odd51(L, n);
    case Method::kOdd53:
      if (n % 2 == 0) throw ParityMismatch("method odd53 needs odd n");
      return by_odd53(L, n);
    case Method::kTestingSet:
      return by_testing_set(L, n);
  }
  throw InternalFault("unhandled method");
}

bool quaternary_2universal(const BongLattice& L) {
  if (L.rank() != 4) throw RankError("quaternary check needs rank 4");
  return by_testing_set(L, 2).universal;
}

namespace {

std::string h_prefix(int k) {
  return k > 0 ? "H^" + std::to_string(k) + " ⊥ " : std::string();
}

// Power of pi as a multiplicative factor (empty for the 0th power).
std::string pi_factor(std::int64_t k) {
  if (k == 0) return "";
  if (k == 1) return "π";
  return "π^{" + std::to_string(k) + "}";
}

// Power of pi as a standalone value.
std::string pi_value(std::int64_t k) { return k == 0 ? "1" : pi_factor(k); }

constexpr const char* kA22 = "2^{-1}A(2,2ρ)";
constexpr const char* kPiA22 = "2^{-1}πA(2,2ρ)";

}  // namespace

std::vector<TestingEntry> testing_set(const FieldContext& ctx, int n) {
  if (n < 2) throw BadParams("testing sets start at n = 2");
  const std::int64_t twoe = 2 * ctx.e();
  const int U = ctx.unit_class_count();
  const FieldElement one = ctx.one();
  const FieldElement neg_h = -ctx.pi_pow(-twoe);
  std::vector<TestingEntry> out;

  auto with_planes = [&](int k, std::vector<FieldElement> tail) {
    std::vector<FieldElement> diag;
    diag.reserve(static_cast<std::size_t>(2 * k) + tail.size());
    for (int i = 0; i < k; ++i) {
      diag.push_back(one);
      diag.push_back(neg_h);
    }
    for (auto& t : tail) diag.push_back(std::move(t));
    return make_bong(ctx, std::move(diag));
  };

  if (n % 2 == 0) {
    const int k = (n - 2) / 2;
    out.push_back({1, ctx.trivial_class(), "H^" + std::to_string(n / 2),
                   with_planes(n / 2, {})});
    if (n >= 4) {
      out.push_back({2, ctx.trivial_class(),
                     h_prefix((n - 4) / 2) + kA22 + " ⊥ " + kPiA22,
                     with_planes((n - 4) / 2,
                                 {one, -ctx.delta().mul_pi_pow(-twoe), ctx.pi(),
                                  -ctx.delta().mul_pi_pow(1 - twoe)})});
    }
    out.push_back({1, ctx.delta_class(), h_prefix(k) + kA22,
                   with_planes(k, {one, -ctx.delta().mul_pi_pow(-twoe)})});
    out.push_back({2, ctx.delta_class(), h_prefix(k) + kPiA22,
                   with_planes(k, {ctx.pi(), -ctx.delta().mul_pi_pow(1 - twoe)})});
    for (int idx = 0; idx < U; ++idx) {
      if (idx == 0 || ctx.unit_class(idx) == ctx.delta_class()) continue;
      const SquareClass cls = ctx.unit_class(idx);
      const std::int64_t d = ctx.unit_class_dval(idx).as_integer();
      const std::int64_t p = (1 - d) / 2;
      const std::int64_t q = (d - 1) / 2;
      const FieldElement rep = ctx.unit_class_rep(idx);
      const FieldElement rep_sharp = ctx.sharp(rep);
      const std::string base = pi_factor(p) + "A(" + pi_value(q) + ",-(δ-1)" +
                               pi_factor(p) + ")";
      out.push_back({1, cls, h_prefix(k) + base,
                     with_planes(k, {one, -rep.mul_pi_pow(1 - d)})});
      out.push_back({2, cls,
                     h_prefix(k) + "(1+4ρ(δ-1)^{-1})·" + base,
                     with_planes(k, {rep_sharp, -(rep_sharp * rep).mul_pi_pow(1 - d)})});
    }
    for (int idx = 0; idx < U; ++idx) {
      const SquareClass cls = ctx.unit_class(idx, 1);
      const FieldElement eps = ctx.unit_class_rep(idx);
      out.push_back({1, cls, h_prefix(k) + "⟨1,-επ⟩",
                     with_planes(k, {one, -(eps * ctx.pi())})});
      out.push_back({2, cls, h_prefix(k) + "⟨Δ,-Δεπ⟩",
                     with_planes(k, {ctx.delta(), -(ctx.delta() * eps * ctx.pi())})});
    }
    return out;
  }

  const int k1 = (n - 1) / 2;
  const int k2 = (n - 3) / 2;
  const FieldElement kap = ctx.unit_class_rep(ctx.kappa_index());
  const FieldElement kap_sharp = ctx.sharp(kap);
  for (int idx = 0; idx < U; ++idx) {
    const SquareClass cls = ctx.unit_class(idx);
    const FieldElement eps = ctx.unit_class_rep(idx);
    out.push_back({1, cls, h_prefix(k1) + "⟨ε⟩", with_planes(k1, {eps})});
    out.push_back(
        {2, cls,
         h_prefix(k2) + kPiA22 + " ⊥ ⟨Δε⟩",
         with_planes(k2, {eps * kap_sharp, -(eps * kap_sharp * kap).mul_pi_pow(2 - twoe),
                          eps * kap})});
  }
  for (int idx = 0; idx < U; ++idx) {
    const SquareClass cls = ctx.unit_class(idx, 1);
    const FieldElement eps = ctx.unit_class_rep(idx);
    out.push_back({1, cls, h_prefix(k1) + "⟨επ⟩",
                   with_planes(k1, {eps * ctx.pi()})});
    out.push_back(
        {2, cls,
         h_prefix(k2) + kA22 + " ⊥ ⟨Δεπ⟩",
         with_planes(k2, {one, -ctx.delta().mul_pi_pow(-twoe),
                          ctx.delta() * eps * ctx.pi()})});
  }
  return out;
}

bool minimality_check(const FieldContext& ctx, int n, std::string* note) {
  const auto set = testing_set(ctx, n);
  const auto next = testing_set(ctx, n + 2);
  for (const auto& target : set) {
    const TestingEntry* companion = nullptr;
    for (const auto& cand : next) {
      if (cand.nu == 3 - target.nu && cand.c == target.c) {
        companion = &cand;
        break;
      }
    }
    if (companion == nullptr) throw InternalFault("companion entry missing");
    for (const auto& probe : set) {
      const bool rep = represents(probe.lattice, companion->lattice).represented;
      const bool expect = !(probe.nu == target.nu && probe.c == target.c);
      if (rep != expect) {
        if (note != nullptr) {
          *note = "target nu=" + std::to_string(target.nu) + ",c=" + target.c.id() +
                  " probe nu=" + std::to_string(probe.nu) + ",c=" + probe.c.id() +
                  " represented=" + (rep ? "true" : "false");
        }
        return false;
      }
    }
  }
  return true;
}

BongLattice sample_lattice(const FieldContext& ctx, int m, std::int64_t r_bound,
                           std::mt19937_64& rng) {
  if (m < 1) throw BadParams("rank must be positive");
  if (r_bound < 0) throw BadParams("r_bound must be nonnegative");
  const std::int64_t twoe = 2 * ctx.e();
  const int U = ctx.unit_class_count();
  std::uniform_int_distribution<int> unit_pick(0, U - 1);
  std::uniform_int_distribution<std::int64_t> first_pick(0, r_bound);
  std::uniform_int_distribution<std::int64_t> incr_pick(-twoe, r_bound);
  std::uniform_int_distribution<int> bias_pick(0, 9);
  std::uniform_int_distribution<int> fav_pick(0, 4);
  const std::int64_t favored[5] = {-twoe, 2 - twoe, 1, twoe, twoe + 1};
  const SquareClass neg = ctx.neg_one_class();

  for (int restart = 0; restart < 10000; ++restart) {
    std::vector<std::int64_t> R;
    std::vector<int> idx;
    bool dead = false;
    for (int i = 0; i < m && !dead; ++i) {
      bool placed = false;
      for (int t = 0; t < 60 && !placed; ++t) {
        const std::int64_t r =
            (i == 0) ? first_pick(rng)
                     : R[i - 1] + (bias_pick(rng) < 3 ? favored[fav_pick(rng)]
                                                      : incr_pick(rng));
        const int u = unit_pick(rng);
        if (i >= 2 && R[i - 2] > r) continue;
        if (i >= 1) {
          const std::int64_t diff = r - R[i - 1];
          if (diff < -twoe) continue;
          const SquareClass a =
              ctx.unit_class(idx[i - 1], static_cast<int>(((R[i - 1] % 2) + 2) % 2));
          const SquareClass b = ctx.unit_class(u, static_cast<int>(((r % 2) + 2) % 2));
          const Val d = ctx.class_mul(neg, ctx.class_mul(a, b)).dval();
          if (Val::of(diff) + d < Val::of(0)) continue;
        }
        R.push_back(r);
        idx.push_back(u);
        placed = true;
      }
      if (!placed) dead = true;
    }
    if (dead) continue;
    std::vector<FieldElement> diag;
    diag.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
      diag.push_back(ctx.unit_class_rep(idx[i]).mul_pi_pow(R[i]));
    return make_bong(ctx, std::move(diag));
  }
  throw InternalFault("lattice sampling failed to converge");
}

CrosscheckReport crosscheck(const FieldContext& ctx, int n, int count,
                            std::int64_t seed) {
  if (n < 2) throw BadParams("universality needs n >= 2");
  if (count < 0) throw BadParams("count must be nonnegative");
  CrosscheckReport report;
  report.n = n;
  report.count = count;
  report.seed = seed;
  const std::int64_t r_bound = 2 * ctx.e() + 3;
  for (int k = 0; k < count; ++k) {
    std::seed_seq sq{static_cast<unsigned>(static_cast<std::uint64_t>(seed) & 0xffffffffu),
                     static_cast<unsigned>(static_cast<std::uint64_t>(seed) >> 32),
                     static_cast<unsigned>(k)};
    std::mt19937_64 rng(sq);
    const int m = n + 2 + (k % 4);
    const BongLattice L = sample_lattice(ctx, m, r_bound, rng);
    const bool v1 = decide_universal(L, n, Method::kThm11).universal;
    const bool v2 =
        decide_universal(L, n, n % 2 ? Method::kOdd51 : Method::kEven41).universal;
    const bool v3 =
        decide_universal(L, n, n % 2 ? Method::kOdd53 : Method::kEven47).universal;
    const bool v4 = decide_universal(L, n, Method::kTestingSet).universal;
    if (!(v1 == v2 && v1 == v3 && v1 == v4)) {
      ++report.disagreements;
      if (report.details.size() < 25) {
        std::ostringstream os;
        os << "k=" << k << " m=" << m << " R=(";
        for (int i = 1; i <= L.rank(); ++i) os << (i > 1 ? "," : "") << L.R(i);
        os << ") classes=(";
        for (int i = 1; i <= L.rank(); ++i)
          os << (i > 1 ? ";" : "")
             << ctx.class_mul(L.prefix_class(i), L.prefix_class(i - 1)).id();
        os << ") verdicts=" << v1 << v2 << v3 << v4;
        report.details.push_back(os.str());
      }
    }
  }
  return report;
}

}  // namespace dyadic
