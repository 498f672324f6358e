#include <bit>
#include <cstring>
#include <vector>

#include "dyadic/field.h"

namespace dyadic {

namespace {

// Finite model O/pi^M in coefficient form: x = sum_{j<e} c_j pi^j lies in
// pi^M O iff every c_j is divisible by 2^ceil((M-j)/e), so the quotient is a
// product of cyclic groups and addition is coordinate-wise. M = 2e+3 suffices
// for z^2 = a x^2 + b y^2 with a, b of valuation at most one: at a primitive
// solution the derivative along the unit variable has valuation at most e+1,
// and a solution modulo pi^{2(e+1)+1} lifts.
struct HilbertRing {
  const FieldContext& F;
  int e, f, M;
  int width[kMaxE];            // bits kept per coordinate of slot j
  int off[kMaxE][kMaxF];       // bit offset of coordinate (j, i)
  int B = 0;                   // total index bits (= f*M)
  std::size_t N = 0;
  std::uint32_t kpoly;
  std::int64_t ecoef[kMaxE][kMaxF];  // Eisenstein coefficients, low bits
  std::vector<std::uint8_t> sqflag;  // bit0: a square; bit1: a unit square
  std::vector<std::uint32_t> sqvals;
  std::uint32_t pi_idx = 0;

  explicit HilbertRing(const FieldContext& ctx)
      : F(ctx), e(ctx.e()), f(ctx.f()), M(2 * ctx.e() + 3), kpoly(ctx.k().poly()) {
    for (int j = 0; j < e; ++j) {
      width[j] = (M - j + e - 1) / e;
      for (int i = 0; i < f; ++i) {
        off[j][i] = B;
        B += width[j];
      }
    }
    if (B > 24) throw BadParams("Hilbert pairing model too large at this e and f");
    N = std::size_t{1} << B;
    for (int j = 0; j < e; ++j) {
      Scalar s = F.eis_coeff(j);
      for (int i = 0; i < f; ++i) ecoef[j][i] = static_cast<std::int64_t>(s[i] & 0xffff);
    }
    // pi itself: slot 1 for ramified fields, the value -a_0 when e = 1.
    if (e >= 2) {
      pi_idx = std::uint32_t{1} << off[1][0];
    } else {
      std::int64_t c[kMaxE][kMaxF] = {};
      c[0][0] = -ecoef[0][0];
      for (int i = 1; i < f; ++i) c[0][i] = -ecoef[0][i];
      pi_idx = encode(c);
    }
    sqflag.assign(N, 0);
    for (std::size_t z = 0; z < N; ++z) {
      std::uint32_t s = mul(static_cast<std::uint32_t>(z), static_cast<std::uint32_t>(z));
      if (!sqflag[s]) sqvals.push_back(s);
      sqflag[s] |= static_cast<std::uint8_t>(1 | (unit(static_cast<std::uint32_t>(z)) ? 2 : 0));
    }
  }

  std::uint32_t coord(std::uint32_t v, int j, int i) const {
    return (v >> off[j][i]) & ((std::uint32_t{1} << width[j]) - 1);
  }

  std::uint32_t encode(const std::int64_t c[kMaxE][kMaxF]) const {
    std::uint32_t v = 0;
    for (int j = 0; j < e; ++j) {
      std::uint32_t m = (std::uint32_t{1} << width[j]) - 1;
      for (int i = 0; i < f; ++i)
        v |= (static_cast<std::uint32_t>(c[j][i]) & m) << off[j][i];
    }
    return v;
  }

  bool unit(std::uint32_t v) const {
    for (int i = 0; i < f; ++i)
      if (coord(v, 0, i) & 1) return true;
    return false;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0;
    for (int j = 0; j < e; ++j) {
      std::uint32_t m = (std::uint32_t{1} << width[j]) - 1;
      for (int i = 0; i < f; ++i)
        r |= ((coord(a, j, i) + coord(b, j, i)) & m) << off[j][i];
    }
    return r;
  }

  // t-coordinate product of two slot vectors, reduced by the residue poly,
  // accumulated (signed) into acc.
  void o0_mul_acc(const std::int64_t* a, const std::int64_t* b, std::int64_t sign,
                  std::int64_t* acc) const {
    std::int64_t tw[2 * kMaxF] = {};
    for (int i = 0; i < f; ++i) {
      if (a[i] == 0) continue;
      for (int k2 = 0; k2 < f; ++k2) tw[i + k2] += a[i] * b[k2];
    }
    for (int d = 2 * f - 2; d >= f; --d) {
      std::int64_t g = tw[d];
      if (g == 0) continue;
      tw[d] = 0;
      for (int i = 0; i < f; ++i)
        if (kpoly >> i & 1) tw[d - f + i] -= g;
    }
    for (int i = 0; i < f; ++i) acc[i] += sign * tw[i];
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    std::int64_t ca[kMaxE][kMaxF], cb[kMaxE][kMaxF];
    for (int j = 0; j < e; ++j)
      for (int i = 0; i < f; ++i) {
        ca[j][i] = coord(a, j, i);
        cb[j][i] = coord(b, j, i);
      }
    std::int64_t wide[2 * kMaxE][kMaxF] = {};
    for (int j1 = 0; j1 < e; ++j1)
      for (int j2 = 0; j2 < e; ++j2) o0_mul_acc(ca[j1], cb[j2], 1, wide[j1 + j2]);
    for (int d = 2 * e - 2; d >= e; --d) {
      std::int64_t g[kMaxF];
      std::memcpy(g, wide[d], sizeof g);
      for (int j = 0; j < e; ++j) o0_mul_acc(g, ecoef[j], -1, wide[d - e + j]);
    }
    std::uint32_t r = 0;
    for (int j = 0; j < e; ++j) {
      std::uint32_t m = (std::uint32_t{1} << width[j]) - 1;
      for (int i = 0; i < f; ++i)
        r |= (static_cast<std::uint32_t>(wide[j][i]) & m) << off[j][i];
    }
    return r;
  }

  std::uint32_t lift(std::uint32_t mask) const {
    std::int64_t c[kMaxE][kMaxF] = {};
    for (int i = 0; i < f; ++i) c[0][i] = (mask >> i) & 1;
    return encode(c);
  }

  std::uint32_t encode_elem(const FieldElement& x) const {
    if (x.is_exact_zero()) return 0;
    std::int64_t v = x.ord();
    if (v < 0) throw BadParams("solution search requires integral arguments");
    if (v >= M) return 0;
    std::vector<std::uint32_t> rel = x.rel_digits(M - static_cast<int>(v));
    std::uint32_t acc = 0;
    for (int k2 = M - 1; k2 >= 0; --k2) {
      acc = mul(acc, pi_idx);
      std::uint32_t dig = (k2 >= v) ? rel[static_cast<std::size_t>(k2 - v)] : 0;
      if (dig) acc = add(acc, lift(dig));
    }
    return acc;
  }

  // +1 iff z^2 = a x^2 + b y^2 has a primitive solution modulo pi^M.
  int search(const FieldElement& a, const FieldElement& b) const {
    std::uint32_t ai = encode_elem(a), bi = encode_elem(b);
    std::vector<std::uint8_t> af(N, 0), bf(N, 0);
    std::vector<std::uint32_t> alist, blist;
    alist.reserve(sqvals.size());
    blist.reserve(sqvals.size());
    for (std::uint32_t s : sqvals) {
      std::uint32_t va = mul(ai, s);
      if (!af[va]) alist.push_back(va);
      af[va] |= sqflag[s];
      std::uint32_t vb = mul(bi, s);
      if (!bf[vb]) blist.push_back(vb);
      bf[vb] |= sqflag[s];
    }
    for (std::uint32_t va : alist) {
      bool a_unit = (af[va] & 2) != 0;
      for (std::uint32_t vb : blist) {
        std::uint32_t w = add(va, vb);
        if (a_unit || (bf[vb] & 2)) {
          if (sqflag[w] & 1) return 1;   // x or y can be a unit, any z works
        } else {
          if (sqflag[w] & 2) return 1;   // need z to carry primitivity
        }
      }
    }
    return -1;
  }
};

}  // namespace

void FieldContext::build_pairing() const {
  if (pairing_built_) return;
  ensure_classes();
  HilbertRing ring(*this);
  std::vector<FieldElement> basis = gens_;
  basis.push_back(pi());
  int n = static_cast<int>(basis.size());
  pairing_rows_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (ring.search(basis[i], basis[j]) < 0) {
        pairing_rows_[i] |= std::uint32_t{1} << j;
        pairing_rows_[j] |= std::uint32_t{1} << i;
      }
    }
  }
  pairing_built_ = true;
}

int FieldContext::hilbert_by_table(const SquareClass& a, const SquareClass& b) const {
  ensure_classes();
  build_pairing();
  const int g = static_cast<int>(gens_.size());
  std::uint32_t va = unit_classes_[a.unit_index()].gen_vec |
                     (static_cast<std::uint32_t>(a.parity()) << g);
  std::uint32_t vb = unit_classes_[b.unit_index()].gen_vec |
                     (static_cast<std::uint32_t>(b.parity()) << g);
  int par = 0;
  for (int i = 0; i <= g; ++i) {
    if (va >> i & 1) par ^= std::popcount(pairing_rows_[i] & vb) & 1;
  }
  return par ? -1 : 1;
}

int FieldContext::hilbert(const SquareClass& a, const SquareClass& b) const {
  ensure_classes();
  // When the defect orders overshoot 2e the binary form a x^2 + b y^2 is
  // forced to represent 1, so the symbol is +1 without any table work.
  if (a.dval() + b.dval() > Val::of(2 * e_)) return 1;
  return hilbert_by_table(a, b);
}

int FieldContext::hilbert(const FieldElement& a, const FieldElement& b) const {
  return hilbert(class_of(a), class_of(b));
}

namespace detail {

int hilbert_primitive_search(const FieldContext& ctx, const FieldElement& a,
                             const FieldElement& b) {
  HilbertRing ring(ctx);
  return ring.search(a, b);
}

}  // namespace detail

}  // namespace dyadic
