// Exact half-integer values with a +infinity sentinel.
//
// Defect orders d(c) take values in {0,1,3,...,2e-1,2e} or infinity, and the
// alpha invariants of a good BONG are half-integers. Comparisons between the
// two kinds are exact, so the whole value lattice lives in one type storing
// twice the value.
#pragma once

#include <cstdint>
#include <string>

#include "dyadic/errors.h"

namespace dyadic {

class Val {
 public:
  constexpr Val() : twice_(0), inf_(false) {}

  static constexpr Val of(std::int64_t n) { return Val(2 * n, false); }
  static constexpr Val half(std::int64_t twice) { return Val(twice, false); }
  static constexpr Val inf() { return Val(0, true); }

  constexpr bool is_inf() const { return inf_; }
  constexpr bool is_integer() const { return !inf_ && twice_ % 2 == 0; }

  // Twice the value; only meaningful when finite.
  constexpr std::int64_t twice() const { return twice_; }
  std::int64_t as_integer() const {
    if (inf_ || twice_ % 2 != 0) throw InternalFault("value is not a finite integer");
    return twice_ / 2;
  }

  friend constexpr bool operator==(Val a, Val b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.twice_ == b.twice_);
  }
  friend constexpr bool operator!=(Val a, Val b) { return !(a == b); }
  friend constexpr bool operator<(Val a, Val b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.twice_ < b.twice_;
  }
  friend constexpr bool operator>(Val a, Val b) { return b < a; }
  friend constexpr bool operator<=(Val a, Val b) { return !(b < a); }
  friend constexpr bool operator>=(Val a, Val b) { return !(a < b); }

  friend constexpr Val operator+(Val a, Val b) {
    if (a.inf_ || b.inf_) return inf();
    return Val(a.twice_ + b.twice_, false);
  }
  friend Val operator-(Val a, Val b) {
    if (b.inf_) throw InternalFault("cannot subtract an infinite value");
    if (a.inf_) return inf();
    return Val(a.twice_ - b.twice_, false);
  }
  friend constexpr Val operator+(Val a, std::int64_t n) { return a + of(n); }
  friend Val operator-(Val a, std::int64_t n) { return a - of(n); }

  friend constexpr Val min(Val a, Val b) { return a < b ? a : b; }
  friend constexpr Val max(Val a, Val b) { return a < b ? b : a; }

  std::string str() const {
    if (inf_) return "inf";
    if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

 private:
  constexpr Val(std::int64_t twice, bool inf) : twice_(twice), inf_(inf) {}
  std::int64_t twice_;
  bool inf_;
};

}  // namespace dyadic
