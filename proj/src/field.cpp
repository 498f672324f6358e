#include "dyadic/field.h"

#include <algorithm>
#include <bit>
#include <cassert>

namespace dyadic {

// ---------------------------------------------------------------------------
// scalar layer: O_0 elements as t-coordinate vectors mod 2^kbits

Scalar FieldContext::s_from_int(std::int64_t n) const {
  Scalar r{};
  r[0] = static_cast<std::uint64_t>(n) & kmask_;
  return r;
}

Scalar FieldContext::s_add(const Scalar& a, const Scalar& b) const {
  Scalar r{};
  for (int i = 0; i < f_; ++i) r[i] = (a[i] + b[i]) & kmask_;
  return r;
}

Scalar FieldContext::s_sub(const Scalar& a, const Scalar& b) const {
  Scalar r{};
  for (int i = 0; i < f_; ++i) r[i] = (a[i] - b[i]) & kmask_;
  return r;
}

Scalar FieldContext::s_neg(const Scalar& a) const {
  Scalar r{};
  for (int i = 0; i < f_; ++i) r[i] = (0 - a[i]) & kmask_;
  return r;
}

Scalar FieldContext::s_mul(const Scalar& a, const Scalar& b) const {
  // Schoolbook product in t, then reduce with t^f = -(low part of the
  // defining polynomial); its coefficients are 0/1 lifts.
  std::array<std::uint64_t, 2 * kMaxF> wide{};
  for (int i = 0; i < f_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < f_; ++j) wide[i + j] += a[i] * b[j];
  }
  const std::uint32_t poly = k_.poly();
  for (int d = 2 * f_ - 2; d >= f_; --d) {
    std::uint64_t g = wide[d];
    if (g == 0) continue;
    wide[d] = 0;
    for (int i = 0; i < f_; ++i) {
      if (poly >> i & 1) wide[d - f_ + i] -= g;
    }
  }
  Scalar r{};
  for (int i = 0; i < f_; ++i) r[i] = wide[i] & kmask_;
  return r;
}

Scalar FieldContext::s_half(const Scalar& a) const {
  Scalar r{};
  for (int i = 0; i < f_; ++i) {
    if (a[i] & 1) throw InternalFault("halving an odd scalar");
    r[i] = (a[i] >> 1) & kmask_;
  }
  return r;
}

bool FieldContext::s_is_zero(const Scalar& a) const {
  for (int i = 0; i < f_; ++i)
    if (a[i] != 0) return false;
  return true;
}

int FieldContext::s_ord2(const Scalar& a) const {
  int best = kbits_;
  for (int i = 0; i < f_; ++i) {
    if (a[i] != 0) best = std::min(best, std::countr_zero(a[i]));
  }
  return best;
}

std::uint32_t FieldContext::s_residue(const Scalar& a) const {
  std::uint32_t m = 0;
  for (int i = 0; i < f_; ++i) m |= static_cast<std::uint32_t>(a[i] & 1) << i;
  return m;
}

Scalar FieldContext::s_lift(std::uint32_t mask) const {
  Scalar r{};
  for (int i = 0; i < f_; ++i) r[i] = (mask >> i) & 1;
  return r;
}

Scalar FieldContext::s_inv(const Scalar& a) const {
  if ((a[0] & 1) == 0 && s_residue(a) == 0) throw DivisionByZero();
  // Newton iteration x <- x(2 - ax), starting from the residue-field inverse.
  Scalar x = s_lift(k_.inv(s_residue(a)));
  Scalar two = s_from_int(2);
  for (int it = 0; it < 8; ++it) {
    Scalar t = s_sub(two, s_mul(a, x));
    x = s_mul(x, t);
  }
  // 8 doublings exceed 62 trusted bits; verify anyway.
  Scalar check = s_mul(a, x);
  if (!s_is_zero(s_sub(check, s_from_int(1))))
    throw InternalFault("scalar inversion failed to converge");
  return x;
}

// ---------------------------------------------------------------------------
// polynomial layer modulo the Eisenstein relation pi^e = -(a_0 + ... )

FieldContext::Poly FieldContext::p_mul(const Poly& a, const Poly& b) const {
  std::array<Scalar, 2 * kMaxE> wide{};
  for (int i = 0; i < e_; ++i) {
    if (s_is_zero(a[i])) continue;
    for (int j = 0; j < e_; ++j) wide[i + j] = s_add(wide[i + j], s_mul(a[i], b[j]));
  }
  Poly out{};
  p_fold(wide.data(), &out);
  return out;
}

void FieldContext::p_fold(Scalar* wide, Poly* out) const {
  for (int d = 2 * e_ - 2; d >= e_; --d) {
    Scalar g = wide[d];
    if (s_is_zero(g)) continue;
    wide[d] = s_zero();
    for (int j = 0; j < e_; ++j) wide[d - e_ + j] = s_sub(wide[d - e_ + j], s_mul(g, eis_[j]));
  }
  for (int j = 0; j < e_; ++j) (*out)[j] = wide[j];
}

FieldContext::Poly FieldContext::p_mul_pi(const Poly& a) const {
  Poly r{};
  const Scalar& top = a[e_ - 1];
  r[0] = s_is_zero(top) ? s_zero() : s_neg(s_mul(top, eis_[0]));
  for (int j = 1; j < e_; ++j) {
    r[j] = a[j - 1];
    if (!s_is_zero(top)) r[j] = s_sub(r[j], s_mul(top, eis_[j]));
  }
  return r;
}

// ---------------------------------------------------------------------------
// element layer

FieldElement FieldContext::make_elem(std::int64_t shift, const Poly& c, int kb) const {
  FieldElement x(this, FieldElement::kNormal, shift, std::min(kb, kbits_));
  for (int j = 0; j < e_; ++j) x.c_[j] = c[j];
  x.normalize();
  return x;
}

void FieldElement::normalize() {
  const FieldContext& F = *ctx_;
  if (state_ == kExactZero) return;
  if (kb_ <= 0) {
    state_ = kApparentZero;
    kb_ = 0;
    return;
  }
  const std::uint64_t trust_mask = (kb_ >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << kb_) - 1);
  std::int64_t w = -1;
  for (int j = 0; j < F.e(); ++j) {
    Scalar masked{};
    for (int i = 0; i < F.f(); ++i) masked[i] = c_[j][i] & trust_mask;
    if (F.s_is_zero(masked)) continue;
    std::int64_t cand = std::int64_t{F.e()} * F.s_ord2(masked) + j;
    if (w < 0 || cand < w) w = cand;
  }
  if (w < 0) {
    state_ = kApparentZero;
    return;
  }
  if (w == 0) {
    state_ = kNormal;
    return;
  }
  // Divide by pi w times using 2 = pi * u(pi); costs ceil(w/e) trusted bits.
  // If that would exhaust the trust window, halving below could consume noise
  // bits, so downgrade to an apparent zero over the part we still vouch for.
  std::int64_t loss = (w + F.e() - 1) / F.e();
  if (kb_ - loss <= 0) {
    kb_ = static_cast<int>(w / F.e());
    state_ = kApparentZero;
    return;
  }
  for (std::int64_t step = 0; step < w; ++step) {
    Scalar g = F.s_half(c_[0]);
    FieldContext::Poly next{};
    for (int j = 0; j < F.e(); ++j) {
      next[j] = (j + 1 < F.e()) ? c_[j + 1] : F.s_zero();
      next[j] = F.s_add(next[j], F.s_mul(g, F.upoly_[j]));
    }
    for (int j = 0; j < F.e(); ++j) c_[j] = next[j];
  }
  shift_ += w;
  kb_ -= static_cast<int>(loss);
  if (F.s_residue(c_[0]) == 0) throw InternalFault("normalization left an even constant slot");
  state_ = kNormal;
}

std::int64_t FieldElement::ord() const {
  if (state_ == kExactZero) throw BadParams("valuation of the zero element");
  if (state_ == kApparentZero) throw PrecisionLoss("valuation not determinable at current precision");
  return shift_;
}

Val FieldElement::ord_val() const {
  if (state_ == kExactZero) return Val::inf();
  return Val::of(ord());
}

int FieldElement::rel_prec() const {
  if (state_ == kExactZero) return 1 << 20;
  return ctx_->e() * kb_;
}

std::int64_t FieldElement::prec() const {
  if (state_ == kExactZero) return std::int64_t{1} << 40;
  return shift_ + std::int64_t{ctx_->e()} * kb_;
}

std::uint32_t FieldElement::leading_digit() const {
  if (state_ != kNormal) throw InternalFault("leading digit of a zero-like element");
  return ctx_->s_residue(c_[0]);
}

std::vector<std::uint32_t> FieldElement::rel_digits(int count) const {
  const FieldContext& F = *ctx_;
  if (state_ == kExactZero) throw BadParams("digits of the zero element");
  if (state_ == kApparentZero) throw PrecisionLoss();
  if (count > F.e() * (kb_ - 2)) throw PrecisionLoss("not enough trusted digits");
  std::vector<Scalar> w(static_cast<std::size_t>(count) + F.e() + 1, Scalar{});
  for (int j = 0; j < F.e(); ++j) w[j] = c_[j];
  std::vector<std::uint32_t> digits(count);
  for (int j = 0; j < count; ++j) {
    std::uint32_t dig = F.s_residue(w[j]);
    digits[j] = dig;
    Scalar rest = F.s_sub(w[j], F.s_lift(dig));
    Scalar g = F.s_half(rest);
    if (F.s_is_zero(g)) continue;
    for (int i = 0; i < F.e(); ++i) w[j + 1 + i] = F.s_add(w[j + 1 + i], F.s_mul(g, F.upoly_[i]));
  }
  return digits;
}

bool FieldElement::equals_to_digits(const FieldElement& other, int count) const {
  if (is_zero_like() || other.is_zero_like()) {
    // Only exact zeros compare equal here; apparent zeros are undecidable.
    if (state_ == kExactZero && other.state_ == kExactZero) return true;
    if (state_ == kExactZero || other.state_ == kExactZero) return false;
    throw PrecisionLoss();
  }
  if (ord() != other.ord()) return false;
  return rel_digits(count) == other.rel_digits(count);
}

FieldElement operator-(const FieldElement& x) {
  const FieldContext& F = x.ctx();
  if (x.state_ == FieldElement::kExactZero) return x;
  FieldElement r = x;
  for (int j = 0; j < F.e(); ++j) r.c_[j] = F.s_neg(r.c_[j]);
  return r;
}

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  const FieldContext& F = x.ctx_ ? x.ctx() : y.ctx();
  if (x.state_ == FieldElement::kExactZero) return y;
  if (y.state_ == FieldElement::kExactZero) return x;
  // Align to the smaller shift; a slot gains floor(dist/e) trusted bits when
  // shifted up, since its error ideal is fixed while the reference moves.
  const FieldElement* lo = &x;
  const FieldElement* hi = &y;
  if (lo->shift_ > hi->shift_) std::swap(lo, hi);
  std::int64_t dist = hi->shift_ - lo->shift_;
  const std::int64_t horizon = std::int64_t{F.e()} * (F.kbits() + 2);
  int kb_hi_aligned;
  FieldContext::Poly hp{};
  if (dist >= horizon) {
    // hi sits entirely above lo's representable window
    kb_hi_aligned = F.kbits();
  } else {
    for (int j = 0; j < F.e(); ++j) hp[j] = hi->c_[j];
    for (std::int64_t i = 0; i < dist; ++i) hp = F.p_mul_pi(hp);
    kb_hi_aligned = static_cast<int>(
        std::min<std::int64_t>(F.kbits(), hi->kb_ + dist / F.e()));
  }
  FieldContext::Poly sum{};
  for (int j = 0; j < F.e(); ++j) sum[j] = F.s_add(lo->c_[j], hp[j]);
  int kb = std::min(lo->kb_, kb_hi_aligned);
  return F.make_elem(lo->shift_, sum, kb);
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) { return x + (-y); }

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  const FieldContext& F = x.ctx_ ? x.ctx() : y.ctx();
  if (x.state_ == FieldElement::kExactZero || y.state_ == FieldElement::kExactZero)
    return F.zero();
  FieldContext::Poly px{}, py{};
  for (int j = 0; j < F.e(); ++j) {
    px[j] = x.c_[j];
    py[j] = y.c_[j];
  }
  return F.make_elem(x.shift_ + y.shift_, F.p_mul(px, py), std::min(x.kb_, y.kb_));
}

FieldElement FieldElement::inv() const {
  const FieldContext& F = *ctx_;
  if (state_ == kExactZero) throw DivisionByZero();
  if (state_ == kApparentZero) throw PrecisionLoss("inverting an apparent zero");
  // Newton for V with UV = 1, error ideal squaring in (pi) each step.
  FieldContext::Poly u{}, v{};
  for (int j = 0; j < F.e(); ++j) u[j] = c_[j];
  v[0] = F.s_inv(c_[0]);
  int need = F.e() * F.kbits();
  for (int reached = 1; reached < need; reached *= 2) {
    FieldContext::Poly uv = F.p_mul(u, v);
    FieldContext::Poly corr{};
    corr[0] = F.s_sub(F.s_from_int(2), uv[0]);
    for (int j = 1; j < F.e(); ++j) corr[j] = F.s_neg(uv[j]);
    v = F.p_mul(v, corr);
  }
  return F.make_elem(-shift_, v, kb_);
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) { return x * y.inv(); }

FieldElement FieldElement::mul_pi_pow(std::int64_t k) const {
  if (state_ == kExactZero) return *this;
  FieldElement r = *this;
  r.shift_ += k;
  return r;
}

// ---------------------------------------------------------------------------
// factories

FieldElement FieldContext::zero() const {
  return FieldElement(this, FieldElement::kExactZero, 0, kbits_);
}

FieldElement FieldContext::from_int(std::int64_t n) const {
  if (n == 0) return zero();
  Poly p{};
  p[0] = s_from_int(n);
  return make_elem(0, p, kbits_);
}

FieldElement FieldContext::pi_pow(std::int64_t k) const {
  Poly p{};
  p[0] = s_from_int(1);
  return make_elem(k, p, kbits_);
}

FieldElement FieldContext::lift_residue(std::uint32_t mask) const {
  if (mask == 0) return zero();
  if (mask >= k_.card()) throw BadParams("residue mask out of range");
  Poly p{};
  p[0] = s_lift(mask);
  return make_elem(0, p, kbits_);
}

FieldElement FieldContext::from_digits(std::int64_t val,
                                       const std::vector<std::uint32_t>& digits) const {
  bool all_zero = true;
  for (auto d : digits) {
    if (d >= k_.card()) throw BadParams("digit out of range for the residue field");
    if (d != 0) all_zero = false;
  }
  if (all_zero) return zero();
  if (static_cast<int>(digits.size()) > e_ * (kbits_ - 2))
    throw BadParams("digit list exceeds the precision budget");
  Poly acc{};
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    acc = p_mul_pi(acc);
    acc[0] = s_add(acc[0], s_lift(*it));
  }
  return make_elem(val, acc, kbits_);
}

FieldElement FieldContext::truncate_digits(const FieldElement& x, int count) const {
  return from_digits(x.ord(), x.rel_digits(count));
}

// ---------------------------------------------------------------------------
// quadratic defect machinery

Val FieldContext::descent(const FieldElement& unit, FieldElement* s_out,
                          FieldElement* reduced) const {
  if (unit.rel_prec() < 2 * e_ + 1) throw PrecisionLoss("defect needs 2e+1 relative digits");
  FieldElement s = one();
  FieldElement cur = unit;
  std::int64_t last_t = -1;
  Val d = Val::inf();
  for (int guard = 0;; ++guard) {
    if (guard > 4 * e_ + 8) throw InternalFault("defect descent failed to terminate");
    FieldElement w = cur - one();
    if (w.is_exact_zero()) break;
    if (w.is_apparent_zero()) {
      // w vanishes to its absolute precision; enough window means square.
      if (w.prec() >= 2 * e_ + 1) break;
      throw PrecisionLoss();
    }
    std::int64_t t = w.ord();
    if (t <= last_t) throw InternalFault("defect descent did not progress");
    last_t = t;
    if (t > 2 * e_) break;  // 1 + p^{2e+1} consists of squares
    if (t % 2 == 1) {
      d = Val::of(t);
      break;
    }
    std::uint32_t b;
    if (t == 2 * e_) {
      auto root = k_.solve_artin_schreier_scaled(lambda_bar_, w.leading_digit());
      if (!root) {
        d = Val::of(2 * e_);
        break;
      }
      b = *root;
    } else {
      b = k_.sqrt(w.leading_digit());
    }
    FieldElement step = one() + lift_residue(b).mul_pi_pow(t / 2);
    cur = cur / step.square();
    s = s * step;
  }
  if (s_out) *s_out = s;
  if (reduced) *reduced = cur;
  return d;
}

Val FieldContext::defect_order(const FieldElement& c) const {
  if (c.is_exact_zero()) throw BadParams("defect of the zero element");
  std::int64_t v = c.ord();  // PrecisionLoss on apparent zero
  if (v % 2 != 0) return Val::of(0);
  return descent(c.mul_pi_pow(-v), nullptr, nullptr);
}

bool FieldContext::is_square(const FieldElement& x) const {
  if (x.is_exact_zero()) throw BadParams("square test on the zero element");
  std::int64_t v = x.ord();
  if (v % 2 != 0) return false;
  return descent(x.mul_pi_pow(-v), nullptr, nullptr).is_inf();
}

std::pair<FieldElement, FieldElement> FieldContext::defect_split(
    const FieldElement& delta) const {
  if (delta.is_exact_zero()) throw BadParams("split of the zero element");
  if (delta.ord() != 0) throw DefectOutOfRange("split requires a unit argument");
  FieldElement s, red;
  Val d = descent(delta, &s, &red);
  if (d.is_inf() || d == Val::of(2 * e_) || d == Val::of(0))
    throw DefectOutOfRange("split requires 1 <= d < 2e, got d = " + d.str());
  FieldElement r = (red - one()).mul_pi_pow(-d.as_integer());
  return {s, r};
}

FieldElement FieldContext::sharp(const FieldElement& c) const {
  if (c.is_exact_zero()) throw BadParams("sharp of the zero element");
  std::int64_t v = c.ord();
  if (v % 2 != 0) return delta_;
  FieldElement s, red;
  Val d = descent(c.mul_pi_pow(-v), &s, &red);
  if (d.is_inf()) throw SharpUndefined("sharp undefined on squares");
  if (d == Val::of(2 * e_)) throw SharpUndefined("sharp undefined on the Delta class");
  std::int64_t dn = d.as_integer();
  FieldElement r = (red - one()).mul_pi_pow(-dn);
  return one() + (from_int(4) * rho_ * r.inv()).mul_pi_pow(-dn);
}

// ---------------------------------------------------------------------------
// context construction

FieldContext::~FieldContext() = default;

std::unique_ptr<FieldContext> make_field(int e, int f, FieldOptions opts) {
  if (e < 1 || e > kMaxE) throw BadParams("ramification index out of supported range");
  if (f < 1 || f > kMaxF) throw BadParams("residue degree out of supported range");
  std::unique_ptr<FieldContext> F(new FieldContext());
  F->e_ = e;
  F->f_ = f;
  F->prec_ = opts.prec.value_or(8 * e + 16);
  F->kbits_ = static_cast<int>((F->prec_ + e - 1) / e) + 2;
  if (F->kbits_ < 10) throw BadParams("precision too small to decide defects");
  if (F->kbits_ > kMaxKnownBits) throw BadParams("precision exceeds the single-limb build cap");
  F->kmask_ = (F->kbits_ >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << F->kbits_) - 1);

  std::uint32_t upmask;
  if (opts.unram_poly) {
    const auto& bits = *opts.unram_poly;
    if (static_cast<int>(bits.size()) != f + 1 || bits[f] != 1)
      throw BadParams("unramified polynomial must be monic of degree f");
    upmask = 0;
    for (int i = 0; i <= f; ++i) {
      if (bits[i] != 0 && bits[i] != 1) throw BadParams("unramified polynomial bits must be 0/1");
      upmask |= static_cast<std::uint32_t>(bits[i]) << i;
    }
  } else {
    upmask = ResidueField::default_poly(f);
  }
  F->k_ = ResidueField(f, upmask);

  std::vector<std::vector<std::int64_t>> eis;
  if (opts.eis_poly) {
    eis = *opts.eis_poly;
  } else {
    eis.assign(static_cast<std::size_t>(e) + 1, {0});
    eis[0] = {-2};
    eis[static_cast<std::size_t>(e)] = {1};
  }
  if (static_cast<int>(eis.size()) != e + 1)
    throw NonEisenstein("Eisenstein polynomial must have degree e");
  F->eis_input_ = eis;
  auto coeff_scalar = [&](const std::vector<std::int64_t>& coords) {
    if (static_cast<int>(coords.size()) > f)
      throw BadParams("Eisenstein coefficient has too many t-coordinates");
    Scalar s{};
    for (std::size_t i = 0; i < coords.size(); ++i)
      s[i] = static_cast<std::uint64_t>(coords[i]) & F->kmask_;
    return s;
  };
  Scalar lead = coeff_scalar(eis.back());
  if (F->s_residue(lead) == 0)
    throw NonEisenstein("leading coefficient must be a unit");
  Scalar lead_inv = F->s_inv(lead);
  for (int j = 0; j < e; ++j) F->eis_[j] = F->s_mul(coeff_scalar(eis[j]), lead_inv);
  if (F->s_ord2(F->eis_[0]) != 1)
    throw NonEisenstein("constant term must have valuation exactly one");
  for (int j = 1; j < e; ++j) {
    if (F->s_ord2(F->eis_[j]) < 1)
      throw NonEisenstein("middle coefficients must be non-units");
  }

  // u(pi) with 2 = pi * u(pi), from the Eisenstein relation.
  Scalar w = F->s_half(F->eis_[0]);
  Scalar w_inv = F->s_inv(w);
  for (int i = 0; i + 1 < e; ++i) F->upoly_[i] = F->s_neg(F->s_mul(w_inv, F->eis_[i + 1]));
  F->upoly_[e - 1] = F->s_neg(w_inv);

  if (opts.rho_digits) {
    F->rho_ = F->from_digits(0, *opts.rho_digits);
    if (F->rho_.is_zero_like() || F->rho_.ord() != 0)
      throw BadParams("rho override must be a unit");
    if (F->k_.trace(F->rho_.leading_digit()) != 1)
      throw BadParams("rho override must have residue of absolute trace one");
  } else {
    F->rho_ = F->lift_residue(F->k_.first_trace_one());
  }
  F->delta_ = F->one() - F->from_int(4) * F->rho_;

  FieldElement lam = F->from_int(2).mul_pi_pow(-e);
  if (lam.is_zero_like() || lam.ord() != 0)
    throw InternalFault("2 does not have valuation e in the constructed field");
  F->lambda_bar_ = lam.leading_digit();

  if (F->defect_order(F->delta_) != Val::of(2 * e))
    throw InternalFault("constructed Delta does not have defect 2e");
  return F;
}

}  // namespace dyadic
