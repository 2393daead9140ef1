#pragma once

#include <vector>

#include "tropbun/bundles.hpp"
#include "tropbun/covers.hpp"
#include "tropbun/metric_graph.hpp"
#include "tropbun/subdivision.hpp"

namespace tropbun {

// Point of a circle of circumference `circumference`, coordinate reduced
// into [0, circumference).
struct CirclePoint {
  Rat circumference;
  Rat x;

  CirclePoint(const Rat& ell, const Rat& coord);
};

// Complete isomorphism invariant of a semistable bundle on the standard
// circle whose cover components each carry n/gcd(n,d) sheets: one circle
// coordinate per stable summand, each the minimum of its orbit under
// translation by d*circumference/n.
struct SemistableCanonicalForm {
  int n = 1;
  Int d = 0;
  int h = 1;
  Rat circumference;
  std::vector<Rat> points;  // sorted, size h, each in [0, circumference)

  bool operator==(const SemistableCanonicalForm& o) const = default;
};

// Cyclic degree-n cover of the standard circle with d chips on the first
// lift of the base vertex; stable exactly when gcd(n, d) = 1.
Multidivisor e_trop(int n, Int d, const Rat& circumference);

// e_trop(n, d) twisted by the line bundle of p_x - p_0, built directly on
// the cyclic cover.
Multidivisor psi(const CirclePoint& p, int n, Int d);

SemistableCanonicalForm classify_semistable(const Multidivisor& e);

// Rank of a divisor on a disjoint union of circles by the degree formula,
// with the Jacobian deciding triviality at degree zero; asserted against the
// general chip-firing rank.
int circle_rank(const Divisor& d, long vertex_limit = kDefaultVertexLimit);

// Degree-zero semistable bundles only: at least r+1 trivial summands.
bool brill_noether_member(const Multidivisor& e, int r);

// True when dual(f) is one of e's stable summands; f must be stable with
// slope opposite to e.
bool theta_member(const Multidivisor& e, const Multidivisor& f);

}  // namespace tropbun
