// Arithmetic in the residue field k = GF(2^f), f small.
//
// Elements are bitmasks of polynomial coefficients modulo the defining
// irreducible polynomial. f is bounded by kMaxF so masks fit comfortably in
// 32 bits.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dyadic/errors.h"

namespace dyadic {

inline constexpr int kMaxE = 12;
inline constexpr int kMaxF = 8;

class ResidueField {
 public:
  // poly: bitmask of the defining polynomial including the degree-f bit.
  ResidueField(int f, std::uint32_t poly);

  int degree() const { return f_; }
  std::uint32_t poly() const { return poly_; }
  std::uint32_t card() const { return std::uint32_t{1} << f_; }

  static std::uint32_t default_poly(int f);
  static bool is_irreducible(std::uint32_t poly, int f);

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sqr(std::uint32_t a) const { return mul(a, a); }
  std::uint32_t pow(std::uint32_t a, std::uint64_t n) const;
  std::uint32_t inv(std::uint32_t a) const;

  // The unique square root (Frobenius is bijective in characteristic 2).
  std::uint32_t sqrt(std::uint32_t a) const;

  // Absolute trace to GF(2), returned as 0 or 1.
  int trace(std::uint32_t a) const;

  // A root of z^2 + z = c if one exists (exists iff trace(c) = 0).
  std::optional<std::uint32_t> solve_artin_schreier(std::uint32_t c) const;

  // A root of z^2 + lam*z = c for a nonzero lam, if one exists.
  std::optional<std::uint32_t> solve_artin_schreier_scaled(std::uint32_t lam,
                                                           std::uint32_t c) const;

  // Smallest element (in mask order) with absolute trace 1.
  std::uint32_t first_trace_one() const;

 private:
  int f_;
  std::uint32_t poly_;
};

}  // namespace dyadic
