#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropbun/covers.hpp"
#include "tropbun/divisor_theory.hpp"
#include "tropbun/metric_graph.hpp"

namespace tropbun {

// x -> slope * x + c on an edge, in the src-based coordinate.
struct AffineFn {
  Int slope = 0;
  Rat c;
  bool operator==(const AffineFn& o) const { return slope == o.slope && c == o.c; }
};

// Rank-n bundle presented by transition data over the base model: the
// cover's permutation per edge plus one affine function per sheet (entry k
// belongs to the edge lift whose src endpoint lies in sheet k).
struct BundleCocycle {
  CoverPtr cover;
  std::vector<std::vector<AffineFn>> fns;  // [base model edge][sheet]
};

// Rank-n bundle presented as a divisor on the total space of a free cover.
struct Multidivisor {
  CoverPtr cover;
  Divisor div;  // on cover->total()

  int rank() const { return cover->degree(); }
};

// Transition data of the multidivisor: solve a local potential around every
// total vertex (vertex chips allocated to its first non-forest half-edge),
// take differences along edges, then normalize constants to zero on the
// total spanning forest.
BundleCocycle cocycle_of(const Multidivisor& md);

// A multidivisor presenting the same bundle as the cocycle: the slope sum
// per component placed at the component's root vertex, plus the divisor
// realizing the residual flat class (reduced to the fundamental domain).
Multidivisor multidivisor_of(const BundleCocycle& cc);

Multidivisor direct_sum(const Multidivisor& a, const Multidivisor& b);
Multidivisor tensor(const Multidivisor& a, const Multidivisor& b);
Multidivisor dual(const Multidivisor& a);
// Determinant line bundle: the pushforward divisor on the trivial 1-cover.
Multidivisor determinant(const Multidivisor& a);
// Line bundle of a divisor on the base, as a rank-1 multidivisor.
Multidivisor line_bundle(const GraphPtr& base, const Divisor& d);

// Splits the bundle along the components of the cover's total space, each
// returned as its own cover with sheets relabeled fiberwise. Requires a
// connected base. direct_sum over the result is isomorphic to the input.
std::vector<Multidivisor> summands(const Multidivisor& a);

// Pullback along f of a bundle on f's base: the fibered product viewed as a
// cover of f's total space. Rank is kept, degree multiplies by deg f.
Multidivisor pullback_bundle(const CoverPtr& f, const Multidivisor& e);
// Pushforward along f of a bundle on f's total space: the composed cover.
// Rank multiplies by deg f, degree is kept.
Multidivisor pushforward_bundle(const CoverPtr& f, const Multidivisor& e);

// Degree computed from the divisor and from the cocycle slope sum; the two
// routes are asserted to agree.
Int bundle_degree(const Multidivisor& a);

// Baker-Norine rank of the underlying divisor on the total space (summed
// over components by the disconnected convention).
int bn_rank_bundle(const Multidivisor& a, long vertex_limit = kDefaultVertexLimit);

// Isomorphism: some cover isomorphism carries the one divisor into the
// class of the other (componentwise linear equivalence upstairs).
bool bundle_iso(const Multidivisor& a, const Multidivisor& b,
                long vertex_limit = kDefaultVertexLimit);

// Divisor on b's total space obtained by moving a's divisor through the
// cover isomorphism.
Divisor transport_divisor(const CoverIso& iso, const FreeCover& a,
                          const FreeCover& b, const Divisor& d);

struct StabilityResult {
  bool stable;
  bool semistable;
  Rat slope;                          // total degree / rank
  std::vector<Rat> component_slopes;  // per total component
};
StabilityResult stability(const Multidivisor& a);

struct WRRResult {
  int rank_e;
  int rank_twisted;
  Int degree;
  int n;
  Int euler;
  bool holds;
};
// Weil-type Riemann-Roch: r(E) - r(H(K) tensor E^dual) = deg E + n * chi.
WRRResult wrr_check(const Multidivisor& a, long vertex_limit = kDefaultVertexLimit);

struct LocalSystemEdge {
  Perm perm;
  std::vector<Rat> shifts;
};
// Flat presentation: per base model edge a sheet permutation and one
// translation per sheet. Only degree-zero-per-component bundles have one.
struct LocalSystemRep {
  int rank = 1;
  std::map<std::string, LocalSystemEdge> edges;  // keyed by base model edge id
};

LocalSystemRep to_local_system(const Multidivisor& a);
Multidivisor from_local_system(const GraphPtr& base, const LocalSystemRep& rep);

// Tropical matrices over an edge: min-plus entries are affine functions or
// infinite (absent). Invertible means a unique finite entry per row and
// column.
using TropEntry = std::optional<AffineFn>;
using TropMatrix = std::vector<std::vector<TropEntry>>;  // [row][col]

/// Matrix view of one edge of a cocycle: finite entry at (perm(j), j).
TropMatrix cocycle_matrix(const BundleCocycle& cc, int base_model_edge);
bool trop_invertible(const TropMatrix& t);
// Tropical determinant of an invertible matrix: the sum of its finite
// entries.
AffineFn trop_det(const TropMatrix& t);
// For an invertible matrix whose top-left m x m block is itself invertible,
// the off-diagonal blocks are forced infinite; returns the diagonal blocks.
std::pair<TropMatrix, TropMatrix> split_block_triangular(const TropMatrix& t, int m);

}  // namespace tropbun
