#include <algorithm>
#include <string>

#include "dyadic/field.h"

namespace dyadic {

namespace {

std::string digits_key(const std::vector<std::uint32_t>& digits) {
  std::string s;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(digits[i]);
  }
  return s;
}

}  // namespace

void FieldContext::ensure_classes() const {
  if (classes_built_) return;
  build_unit_classes();
  classes_built_ = true;
  neg_one_idx_ = class_of(from_int(-1)).unit_index();
}

void FieldContext::build_unit_classes() const {
  if (e_ * f_ > 16) throw BadParams("square-class table too large to enumerate at this e*f");
  const int target = e_ * f_ + 1;

  // Greedy independent generators among 1 + a*pi^j (j odd), then Delta.
  // A candidate is dependent iff some product over the current span is a
  // square together with it.
  std::vector<FieldElement> span = {one()};
  std::vector<std::uint32_t> span_vec = {0};
  gens_.clear();
  auto independent = [&](const FieldElement& cand) {
    for (const auto& p : span) {
      if (is_square(cand * p)) return false;
    }
    return true;
  };
  auto add_gen = [&](const FieldElement& cand) {
    std::uint32_t bit = std::uint32_t{1} << gens_.size();
    gens_.push_back(cand);
    std::size_t n = span.size();
    for (std::size_t i = 0; i < n; ++i) {
      span.push_back(span[i] * cand);
      span_vec.push_back(span_vec[i] | bit);
    }
  };
  for (int j = 1; j < 2 * e_ && static_cast<int>(gens_.size()) < target; j += 2) {
    for (std::uint32_t a = 1; a < k_.card() && static_cast<int>(gens_.size()) < target; ++a) {
      FieldElement cand = one() + lift_residue(a).mul_pi_pow(j);
      if (independent(cand)) add_gen(cand);
    }
  }
  if (static_cast<int>(gens_.size()) < target && independent(delta_)) add_gen(delta_);
  if (static_cast<int>(gens_.size()) != target)
    throw InternalFault("unit square-class generator search came up short");

  // One entry per subset product; the representative is the descent-reduced
  // unit truncated to 2e+1 digits, which pins the class exactly because
  // 1 + p^{2e+1} consists of squares.
  struct Raw {
    Val d;
    std::vector<std::uint32_t> digits;
    std::uint32_t vec;
  };
  std::vector<Raw> raw(span.size());
  for (std::size_t v = 0; v < span.size(); ++v) {
    FieldElement red;
    Val d = descent(span[v], nullptr, &red);
    if (d.is_inf() && span_vec[v] != 0)
      throw InternalFault("generator set is not independent");
    raw[v] = Raw{d, red.rel_digits(2 * e_ + 1), span_vec[v]};
  }
  std::vector<std::size_t> order(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto rank = [](Val d) { return d.is_inf() ? std::int64_t{-1} : d.twice(); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (rank(raw[a].d) != rank(raw[b].d)) return rank(raw[a].d) < rank(raw[b].d);
    return raw[a].digits < raw[b].digits;
  });

  unit_classes_.assign(raw.size(), UnitClassInfo{});
  vec_to_idx_.clear();
  class_memo_.clear();
  delta_idx_ = -1;
  kappa_idx_ = -1;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const Raw& r = raw[order[pos]];
    UnitClassInfo& info = unit_classes_[pos];
    info.d = r.d;
    info.gen_vec = r.vec;
    info.rep = from_digits(0, r.digits);
    info.memo_key = digits_key(r.digits);
    info.id = info.memo_key;
    vec_to_idx_.emplace(r.vec, static_cast<int>(pos));
    class_memo_.emplace(info.memo_key, static_cast<int>(pos));
    if (r.d == Val::of(2 * e_)) {
      if (delta_idx_ >= 0) throw InternalFault("two unit classes claim the maximal defect");
      delta_idx_ = static_cast<int>(pos);
    }
    if (kappa_idx_ < 0 && r.d == Val::of(2 * e_ - 1)) kappa_idx_ = static_cast<int>(pos);
  }
  if (!unit_classes_[0].d.is_inf())
    throw InternalFault("trivial class did not sort to index zero");
  if (delta_idx_ < 0) throw InternalFault("no unit class of maximal defect");
  if (kappa_idx_ < 0) throw InternalFault("no unit class of defect 2e-1");
}

SquareClass FieldContext::class_of(const FieldElement& x) const {
  ensure_classes();
  if (x.is_exact_zero()) throw BadParams("square class of the zero element");
  std::int64_t v = x.ord();
  int parity = static_cast<int>(((v % 2) + 2) % 2);
  FieldElement u = x.mul_pi_pow(-v);
  std::string key = digits_key(u.rel_digits(2 * e_ + 1));
  auto it = class_memo_.find(key);
  int idx = -1;
  if (it != class_memo_.end()) {
    idx = it->second;
  } else {
    for (int i = 0; i < static_cast<int>(unit_classes_.size()); ++i) {
      if (is_square(u * unit_classes_[i].rep)) {
        idx = i;
        break;
      }
    }
    if (idx < 0) throw InternalFault("unit does not land in any square class");
    class_memo_.emplace(std::move(key), idx);
  }
  return SquareClass(this, idx, parity);
}

SquareClass FieldContext::unit_class(int idx, int parity) const {
  ensure_classes();
  if (idx < 0 || idx >= static_cast<int>(unit_classes_.size()))
    throw IndexError("unit class index out of range");
  if (parity != 0 && parity != 1) throw BadParams("class parity must be 0 or 1");
  return SquareClass(this, idx, parity);
}

SquareClass FieldContext::class_mul(const SquareClass& a, const SquareClass& b) const {
  ensure_classes();
  std::uint32_t vec =
      unit_classes_[a.unit_index()].gen_vec ^ unit_classes_[b.unit_index()].gen_vec;
  auto it = vec_to_idx_.find(vec);
  if (it == vec_to_idx_.end()) throw InternalFault("class product left the table");
  return SquareClass(this, it->second, a.parity() ^ b.parity());
}

SquareClass FieldContext::class_from_id(const std::string& id) const {
  ensure_classes();
  std::string body = id;
  int parity = 0;
  if (body.rfind("pi*", 0) == 0) {
    parity = 1;
    body = body.substr(3);
  }
  for (const auto& info : unit_classes_) {
    if (info.id == body)
      return SquareClass(this, static_cast<int>(&info - unit_classes_.data()), parity);
  }
  throw BadParams("unknown square-class identifier: " + id);
}

Val SquareClass::dval() const {
  if (parity_ != 0) return Val::of(0);
  return ctx_->unit_class_dval(unit_idx_);
}

FieldElement SquareClass::rep() const {
  return ctx_->unit_class_rep(unit_idx_).mul_pi_pow(parity_);
}

std::string SquareClass::id() const {
  std::string s = parity_ ? "pi*" : "";
  s += ctx_->unit_classes_[unit_idx_].id;
  return s;
}

bool SquareClass::is_trivial() const { return unit_idx_ == 0 && parity_ == 0; }

SquareClass operator*(const SquareClass& a, const SquareClass& b) {
  return a.ctx().class_mul(a, b);
}

}  // namespace dyadic
