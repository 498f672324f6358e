// Decides n-universality of an integral lattice by two independent routes:
// the invariant classification of the R-sequence and alpha values, and
// representation of every member of the minimal testing set. The two routes
// must agree; crosscheck() samples random lattices and compares them.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dyadic/represent.h"

namespace dyadic {

enum class Method { kThm11, kEven41, kEven47, kOdd51, kOdd53, kTestingSet };

Method method_from_token(const std::string& token);  // InputError on unknown
std::string method_token(Method m);

struct UniVerdict {
  bool universal = false;
  Method method = Method::kThm11;
  // Names the clause that decided the verdict; empty when every condition of
  // the method passed.
  std::string witness;
};

// Requires n >= 2 (BadParams), an integral lattice (NotIntegral), and a
// method whose parity matches n (ParityMismatch).
UniVerdict decide_universal(const BongLattice& L, int n, Method method);

// Rank-4 lattices, n = 2, decided through the testing set directly; kept
// separate so the classification route can be cross-checked against it.
bool quaternary_2universal(const BongLattice& L);

struct TestingEntry {
  int nu = 1;
  SquareClass c;       // the square class the entry tests
  std::string jordan;  // schematic Jordan-splitting description
  BongLattice lattice;
};

// The minimal testing set for n-universality, rank n each, keyed by
// (nu, c) with nu in {1, 2}; the label (2, trivial) is absent when n = 2.
std::vector<TestingEntry> testing_set(const FieldContext& ctx, int n);

// Every entry of the degree-n set has a companion of degree n + 2 under the
// label (3 - nu, c) which represents all other entries but not it. Verifies
// the full matrix; on failure writes the offending pair into note.
bool minimality_check(const FieldContext& ctx, int n, std::string* note = nullptr);

// Random valid lattice of the given rank with first norm in [0, r_bound].
BongLattice sample_lattice(const FieldContext& ctx, int m, std::int64_t r_bound,
                           std::mt19937_64& rng);

struct CrosscheckReport {
  int n = 0;
  int count = 0;
  std::int64_t seed = 0;
  int disagreements = 0;
  std::vector<std::string> details;
};

// Samples `count` lattices of ranks n+2 .. n+5 and compares all four
// decision routes on each.
CrosscheckReport crosscheck(const FieldContext& ctx, int n, int count,
                            std::int64_t seed);

}  // namespace dyadic
