#pragma once

#include <vector>

#include "tropbun/rational.hpp"

namespace tropbun {

using IntVec = std::vector<Int>;
using IntMatrix = std::vector<IntVec>;  // row-major, acting on column vectors

// Roots and coroots in dual rank-`rank` lattices, paired coordinatewise and
// matched to each other by index. Vectors must be nonzero and distinct.
struct RootDatum {
  int rank = 0;
  std::vector<IntVec> roots;
  std::vector<IntVec> coroots;
};

struct RootDatumReport {
  bool axiom_i = false;   // <root, matching coroot> = 2
  bool axiom_ii = false;  // every reflection permutes the roots and coroots
  bool ok = false;
};

// Malformed structure (sizes, zero vectors, duplicates) throws; axiom
// failures only mark the report.
RootDatumReport validate(const RootDatum& rd);

// s_alpha(u) = u - <u, coroot_i> root_i as a matrix on the root lattice.
IntMatrix reflection_matrix(const RootDatum& rd, int i);

inline constexpr long kWeylBound = 3628800;

// Closure of the reflections under composition, identity included. Throws
// when the closure passes `bound` elements, which flags a non-finite input.
std::vector<IntMatrix> weyl_group(const RootDatum& rd, long bound = kWeylBound);

// All e_i - e_j in the standard rank-n lattice, self-dual pairing.
RootDatum gl_datum(int n);

// The same roots inside the sum-zero sublattice, written in the basis
// f_k = e_k - e_{k+1} with the induced quotient coroots.
RootDatum sl_datum(int n);

}  // namespace tropbun
