// Exact arithmetic in a dyadic local field F given as an unramified step
// (residue degree f) followed by an Eisenstein step (ramification index e),
// together with the quadratic-defect machinery and square-class tables.
//
// Elements are stored as pi^shift * sum_{j<e} c_j pi^j with c_j in the
// unramified subring O_0, each c_j held modulo 2^kbits in t-coordinates.
// Because 1, pi, ..., pi^{e-1} is a free O_0-basis of O_F, coefficient-wise
// precision equals absolute precision, and ord is exact on any element whose
// trusted window is nonzero: the e monomial valuations are pairwise distinct
// modulo e, so no cancellation between slots can occur.
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dyadic/errors.h"
#include "dyadic/halfint.h"
#include "dyadic/residue_field.h"

namespace dyadic {

inline constexpr int kMaxKnownBits = 62;

// Element of the unramified subring O_0: t-coordinates mod 2^kbits.
using Scalar = std::array<std::uint64_t, kMaxF>;

class FieldContext;

class FieldElement {
 public:
  FieldElement() : ctx_(nullptr), state_(kExactZero), shift_(0), kb_(0), c_{} {}

  const FieldContext& ctx() const { return *ctx_; }
  bool valid() const { return ctx_ != nullptr; }

  bool is_exact_zero() const { return state_ == kExactZero; }
  // All trusted bits vanish but the element is not known to be zero.
  bool is_apparent_zero() const { return state_ == kApparentZero; }
  bool is_zero_like() const { return state_ != kNormal; }

  // Exact valuation. Throws PrecisionLoss on an apparent zero and BadParams
  // on an exact zero (callers that allow zero use ord_val()).
  std::int64_t ord() const;
  Val ord_val() const;  // inf for exact zero

  // Trusted relative precision in pi-digits.
  int rel_prec() const;
  // Absolute precision in pi-digits (element known modulo pi^prec).
  std::int64_t prec() const;

  bool is_unit() const { return state_ == kNormal && shift_ == 0; }

  // Residue digit at the valuation (nonzero for a normalized element).
  std::uint32_t leading_digit() const;

  // `count` pi-adic digits starting at the valuation, each a residue mask.
  std::vector<std::uint32_t> rel_digits(int count) const;

  // Equal as elements when compared through `count` relative digits.
  bool equals_to_digits(const FieldElement& other, int count) const;

  friend FieldElement operator-(const FieldElement& x);
  friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator/(const FieldElement& x, const FieldElement& y);

  FieldElement inv() const;
  FieldElement mul_pi_pow(std::int64_t k) const;  // exact
  FieldElement square() const { return *this * *this; }

 private:
  friend class FieldContext;
  enum State : std::uint8_t { kNormal, kApparentZero, kExactZero };

  FieldElement(const FieldContext* ctx, State st, std::int64_t shift, int kb)
      : ctx_(ctx), state_(st), shift_(shift), kb_(kb), c_{} {}

  void normalize();  // factor out pi^w so the constant slot is odd

  const FieldContext* ctx_;
  State state_;
  std::int64_t shift_;  // power of pi factored out; equals ord when normal
  int kb_;              // trusted 2-adic bits of every coefficient slot
  std::array<Scalar, kMaxE> c_;
};

// A square class of F^x, as an index into the context's unit-class table plus
// the parity of the valuation.
class SquareClass {
 public:
  SquareClass() : ctx_(nullptr), unit_idx_(0), parity_(0) {}
  SquareClass(const FieldContext* ctx, int unit_idx, int parity)
      : ctx_(ctx), unit_idx_(unit_idx), parity_(parity) {}

  const FieldContext& ctx() const { return *ctx_; }
  int unit_index() const { return unit_idx_; }
  int parity() const { return parity_; }

  Val dval() const;          // defect order of the class (0 when parity = 1)
  FieldElement rep() const;  // canonical representative
  std::string id() const;    // stable printable identifier

  friend bool operator==(const SquareClass& a, const SquareClass& b) {
    return a.unit_idx_ == b.unit_idx_ && a.parity_ == b.parity_;
  }
  friend bool operator!=(const SquareClass& a, const SquareClass& b) { return !(a == b); }
  friend SquareClass operator*(const SquareClass& a, const SquareClass& b);

  bool is_trivial() const;  // the class of squares

 private:
  const FieldContext* ctx_;
  int unit_idx_;
  int parity_;
};

struct FieldOptions {
  // 0/1 coefficients of the degree-f polynomial defining k, ascending degree.
  std::optional<std::vector<int>> unram_poly;
  // e+1 coefficients of the Eisenstein polynomial, each given by integer
  // t-coordinates (read 2-adically), ascending degree, leading a unit.
  std::optional<std::vector<std::vector<std::int64_t>>> eis_poly;
  std::optional<int> prec;  // absolute pi-digit precision target
  // Test hook: residue digits of an alternative rho (absolute trace 1).
  std::optional<std::vector<std::uint32_t>> rho_digits;
};

class FieldContext {
 public:
  int e() const { return e_; }
  int f() const { return f_; }
  int ext_degree() const { return e_ * f_; }
  int prec() const { return prec_; }
  int kbits() const { return kbits_; }
  const ResidueField& k() const { return k_; }
  const std::vector<std::vector<std::int64_t>>& eis_poly_input() const { return eis_input_; }
  // Coefficient a_j (0 <= j < e) of the monic Eisenstein polynomial in use.
  Scalar eis_coeff(int j) const {
    if (j < 0 || j >= e_) throw IndexError("Eisenstein coefficient index out of range");
    return eis_[j];
  }

  // ----- element factories -----
  FieldElement zero() const;
  FieldElement one() const { return from_int(1); }
  FieldElement from_int(std::int64_t n) const;
  FieldElement pi_pow(std::int64_t k) const;
  FieldElement pi() const { return pi_pow(1); }
  FieldElement rho() const { return rho_; }
  FieldElement delta() const { return delta_; }
  // Element with the given residue digits starting at pi^val; exact data.
  FieldElement from_digits(std::int64_t val, const std::vector<std::uint32_t>& digits) const;
  FieldElement lift_residue(std::uint32_t mask) const;  // 0/1-coordinate lift

  // ----- quadratic defect machinery -----
  bool is_square(const FieldElement& x) const;
  Val defect_order(const FieldElement& c) const;
  std::pair<FieldElement, FieldElement> defect_split(const FieldElement& delta) const;
  FieldElement sharp(const FieldElement& c) const;

  // ----- square classes (table built lazily on first use) -----
  int unit_class_count() const {
    ensure_classes();
    return static_cast<int>(unit_classes_.size());
  }
  int class_count() const { return 2 * unit_class_count(); }
  SquareClass class_of(const FieldElement& x) const;
  SquareClass unit_class(int idx, int parity = 0) const;
  SquareClass trivial_class() const { return unit_class(0); }
  SquareClass delta_class() const {
    ensure_classes();
    return unit_class(delta_idx_);
  }
  SquareClass neg_one_class() const {
    ensure_classes();
    return unit_class(neg_one_idx_);
  }
  SquareClass class_mul(const SquareClass& a, const SquareClass& b) const;
  SquareClass class_from_id(const std::string& id) const;
  Val unit_class_dval(int idx) const {
    ensure_classes();
    return unit_classes_[idx].d;
  }
  FieldElement unit_class_rep(int idx) const {
    ensure_classes();
    return unit_classes_[idx].rep;
  }
  // First class (in table order) with d = 2e-1; used by ternary tail blocks.
  int kappa_index() const {
    ensure_classes();
    return kappa_idx_;
  }

  // ----- Hilbert symbol -----
  int hilbert(const SquareClass& a, const SquareClass& b) const;
  int hilbert(const FieldElement& a, const FieldElement& b) const;
  // The bilinear-table route without the defect shortcut; exposed so tests
  // can confirm the shortcut agrees with the table.
  int hilbert_by_table(const SquareClass& a, const SquareClass& b) const;

  ~FieldContext();

 private:
  FieldContext() = default;
  friend std::unique_ptr<FieldContext> make_field(int, int, FieldOptions);
  friend class FieldElement;
  friend class SquareClass;
  friend FieldElement operator-(const FieldElement& x);
  friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);

  struct UnitClassInfo {
    FieldElement rep;
    Val d = Val::inf();
    std::uint32_t gen_vec = 0;  // exponents over the generator list
    std::string id;
    std::string memo_key;
  };

  // scalar helpers (t-coordinate vectors mod 2^kbits)
  Scalar s_zero() const { return Scalar{}; }
  Scalar s_from_int(std::int64_t n) const;
  Scalar s_add(const Scalar& a, const Scalar& b) const;
  Scalar s_sub(const Scalar& a, const Scalar& b) const;
  Scalar s_neg(const Scalar& a) const;
  Scalar s_mul(const Scalar& a, const Scalar& b) const;
  Scalar s_half(const Scalar& a) const;  // exact /2 of an even scalar
  Scalar s_inv(const Scalar& a) const;   // inverse of an odd scalar
  bool s_is_zero(const Scalar& a) const;
  int s_ord2(const Scalar& a) const;             // min coordinate 2-valuation
  std::uint32_t s_residue(const Scalar& a) const;  // image in k
  Scalar s_lift(std::uint32_t mask) const;

  // polynomial helpers modulo the Eisenstein relation
  using Poly = std::array<Scalar, kMaxE>;
  Poly p_mul(const Poly& a, const Poly& b) const;
  Poly p_mul_pi(const Poly& a) const;
  void p_fold(Scalar* wide, Poly* out) const;  // reduce degree-2e-2 product

  FieldElement make_elem(std::int64_t shift, const Poly& c, int kb) const;
  FieldElement truncate_digits(const FieldElement& x, int count) const;

  // descent core: repeatedly absorbs square factors; returns the defect order
  // and, when requested, the accumulated square root s and the reduced unit.
  Val descent(const FieldElement& unit, FieldElement* s_out, FieldElement* reduced) const;

  void ensure_classes() const;
  void build_unit_classes() const;
  void build_pairing() const;

  int e_ = 1, f_ = 1;
  int prec_ = 0;   // absolute pi-digit precision target
  int kbits_ = 0;  // trusted bits per coefficient slot at full precision
  std::uint64_t kmask_ = 0;
  ResidueField k_{1, 2};
  std::vector<std::vector<std::int64_t>> eis_input_;
  std::array<Scalar, kMaxE> eis_{};    // a_0..a_{e-1} of monic E
  std::array<Scalar, kMaxE> upoly_{};  // u with 2 = pi * u(pi)
  FieldElement rho_, delta_;
  std::uint32_t lambda_bar_ = 1;  // residue of 2 * pi^{-e}

  mutable bool classes_built_ = false;
  mutable std::vector<FieldElement> gens_;  // ef+1 independent unit generators
  mutable std::vector<UnitClassInfo> unit_classes_;
  mutable std::unordered_map<std::uint32_t, int> vec_to_idx_;
  mutable int delta_idx_ = 0;
  mutable int kappa_idx_ = -1;
  mutable int neg_one_idx_ = 0;  // unit class of -1
  mutable std::unordered_map<std::string, int> class_memo_;

  // Hilbert pairing over basis gens_ + pi, built on first use.
  mutable bool pairing_built_ = false;
  mutable std::vector<std::uint32_t> pairing_rows_;
};

std::unique_ptr<FieldContext> make_field(int e, int f, FieldOptions opts = {});

namespace detail {
// Primitive-solution search for z^2 = a x^2 + b y^2 modulo pi^{2e+3};
// the building block of the pairing table, exposed for cross-validation.
int hilbert_primitive_search(const FieldContext& ctx, const FieldElement& a,
                             const FieldElement& b);
}  // namespace detail

}  // namespace dyadic
