// Decides whether one integral lattice is represented by another, working
// entirely on the invariants carried by their norm-generator presentations:
// the R-sequences, the alpha values, and the prefix space invariants.
#pragma once

#include <string>
#include <vector>

#include "dyadic/bong.h"

namespace dyadic {

struct RepVerdict {
  bool represented = false;
  // Empty on success; otherwise the first failing condition ("space", "i",
  // "ii", "iii", "iv") with the index it failed at (0 for "space").
  std::string condition;
  int index = 0;
};

// Indices i where clause (ii) is non-redundant: always 1 and the last index
// min(rank m - 1, rank n), plus every i in between with R_{i+1} > S_{i-1}.
std::vector<int> essential_indices(const BongLattice& m, const BongLattice& n);

// Is n represented by m? Requires rank n <= rank m (RankError) and both
// first norms >= 0 (NotIntegral). With essential_only set, clause (ii) skips
// the indices where a hyperbolic step of m makes it redundant (even i with
// R_i = -2e, R_{i+1} = 0); the verdict must not change.
RepVerdict represents(const BongLattice& n, const BongLattice& m,
                      bool essential_only = false);

}  // namespace dyadic
