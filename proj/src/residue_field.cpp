#include "dyadic/residue_field.h"

namespace dyadic {

namespace {

// Carry-less multiply of small masks, then reduce modulo poly (degree f).
std::uint64_t clmul(std::uint32_t a, std::uint32_t b) {
  std::uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

std::uint32_t reduce(std::uint64_t v, std::uint32_t poly, int f) {
  for (int d = 62; d >= f; --d) {
    if (v >> d & 1) v ^= static_cast<std::uint64_t>(poly) << (d - f);
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace

ResidueField::ResidueField(int f, std::uint32_t poly) : f_(f), poly_(poly) {
  if (f < 1 || f > kMaxF) throw BadParams("residue degree out of supported range");
  if ((poly >> f) != 1) throw BadParams("defining polynomial must be monic of the stated degree");
  if (!is_irreducible(poly, f))
    throw ReducibleUnramifiedPoly("defining polynomial is reducible over GF(2)");
}

bool ResidueField::is_irreducible(std::uint32_t poly, int f) {
  if (f == 1) return true;
  if ((poly & 1) == 0) return false;  // divisible by x
  // Trial division by every polynomial of degree 1..f/2.
  for (int d = 1; 2 * d <= f; ++d) {
    for (std::uint32_t q = (1u << d); q < (2u << d); ++q) {
      // Remainder of poly mod q via repeated top-bit elimination.
      std::uint64_t r = poly;
      for (int top = f; top >= d; --top) {
        if (r >> top & 1) r ^= static_cast<std::uint64_t>(q) << (top - d);
      }
      if (r == 0) return false;
    }
  }
  return true;
}

std::uint32_t ResidueField::default_poly(int f) {
  for (std::uint32_t p = (1u << f); p < (2u << f); ++p) {
    if (is_irreducible(p, f)) return p;
  }
  throw InternalFault("no irreducible polynomial found");
}

std::uint32_t ResidueField::mul(std::uint32_t a, std::uint32_t b) const {
  return reduce(clmul(a, b), poly_, f_);
}

std::uint32_t ResidueField::pow(std::uint32_t a, std::uint64_t n) const {
  std::uint32_t r = 1;
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

std::uint32_t ResidueField::inv(std::uint32_t a) const {
  if (a == 0) throw DivisionByZero();
  return pow(a, card() - 2);
}

std::uint32_t ResidueField::sqrt(std::uint32_t a) const {
  return pow(a, std::uint64_t{1} << (f_ - 1));
}

int ResidueField::trace(std::uint32_t a) const {
  std::uint32_t t = 0, x = a;
  for (int i = 0; i < f_; ++i) {
    t ^= x;
    x = mul(x, x);
  }
  // The trace lands in GF(2) = {0,1}.
  if (t > 1) throw InternalFault("trace did not land in the prime field");
  return static_cast<int>(t);
}

std::optional<std::uint32_t> ResidueField::solve_artin_schreier(std::uint32_t c) const {
  for (std::uint32_t z = 0; z < card(); ++z) {
    if (add(mul(z, z), z) == c) return z;
  }
  return std::nullopt;
}

std::optional<std::uint32_t> ResidueField::solve_artin_schreier_scaled(
    std::uint32_t lam, std::uint32_t c) const {
  if (lam == 0) throw DivisionByZero();
  for (std::uint32_t z = 0; z < card(); ++z) {
    if (add(mul(z, z), mul(lam, z)) == c) return z;
  }
  return std::nullopt;
}

std::uint32_t ResidueField::first_trace_one() const {
  for (std::uint32_t a = 0; a < card(); ++a) {
    if (trace(a) == 1) return a;
  }
  throw InternalFault("no trace-one element");
}

}  // namespace dyadic
