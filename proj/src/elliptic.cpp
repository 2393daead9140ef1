#include "tropbun/elliptic.hpp"

#include <algorithm>
#include <numeric>

#include "tropbun/divisor_theory.hpp"
#include "tropbun/errors.hpp"
#include "tropbun/jacobian.hpp"
#include "tropbun/standard_graphs.hpp"

namespace tropbun {

namespace {

Perm cyclic_perm(int n) {
  Perm p(n);
  for (int j = 0; j < n; ++j) p[j] = (j + 1) % n;
  return p;
}

CoverPtr cyclic_cover(const GraphPtr& base, int n) {
  if (n == 1) return FreeCover::trivial(base, 1);
  return FreeCover::build(base, n, {{"e2", cyclic_perm(n)}});
}

// Covers and coordinates are only addressable on the two-edge presentation.
void require_standard_circle(const GraphPtr& base) {
  bool ok = base != nullptr && base->vertex_count() == 2 &&
            base->edge_count() == 2 &&
            same_graph(base, circle_graph(base->total_length()));
  require(ok, "base must be the standard two-edge circle");
}

}  // namespace

CirclePoint::CirclePoint(const Rat& ell, const Rat& coord) : circumference(ell) {
  require(ell > 0, "circumference must be positive");
  x = rat_mod(coord, ell);
}

Multidivisor e_trop(int n, Int d, const Rat& circumference) {
  require(n >= 1, "rank must be at least one");
  auto base = circle_graph(circumference);
  auto cov = cyclic_cover(base, n);
  Divisor div(cov->total());
  if (d != 0)
    div.add(GraphPoint::vertex(cov->vertex_lift(base->vertex_index("u"), 0)), d);
  return {cov, div};
}

Multidivisor psi(const CirclePoint& p, int n, Int d) {
  Multidivisor e = e_trop(n, d, p.circumference);
  if (p.x != 0) {
    const GraphPtr& base = e.cover->base();
    Divisor twist(base);
    twist.add(circle_point(base, p.x), 1);
    twist.add(GraphPoint::vertex(base->vertex_index("u")), -1);
    e.div = e.div + e.cover->pullback(twist);
  }
  return e;
}

SemistableCanonicalForm classify_semistable(const Multidivisor& e) {
  require(e.cover != nullptr, "bundle has no cover");
  const GraphPtr& base = e.cover->base();
  require_standard_circle(base);
  StabilityResult st = stability(e);
  require(st.semistable, "bundle is not semistable");

  int n = e.rank();
  Int d = bundle_degree(e);
  int h = static_cast<int>(std::gcd(static_cast<Int>(n), d));
  int nprime = n / h;
  Int dprime = d / h;
  Rat ell = base->total_length();

  CoverPtr standard = cyclic_cover(base, nprime);
  GraphPoint u1 =
      GraphPoint::vertex(standard->vertex_lift(base->vertex_index("u"), 0));
  JacobianData jac(standard->total_model());
  Rat step = rat_of(dprime) * ell / nprime;

  SemistableCanonicalForm form;
  form.n = n;
  form.d = d;
  form.h = h;
  form.circumference = ell;
  for (const Multidivisor& part : summands(e)) {
    require(part.rank() == nprime,
            "cover component outside the main moduli component");
    auto isos = cover_isomorphisms(*part.cover, *standard);
    check_internal(!isos.empty(), "equal-degree connected circle covers must match");
    Divisor moved = transport_divisor(isos.front(), *part.cover, *standard, part.div);
    moved.add(u1, -part.div.degree());
    std::vector<Rat> tau = jac.abel_jacobi(moved, u1);
    check_internal(tau.size() == 1, "connected cover of a circle has genus one");
    Rat x = rat_mod(tau[0] / nprime, ell);
    Rat best = x;
    for (int k = 1; k < nprime; ++k) {
      Rat cand = rat_mod(x + rat_of(k) * step, ell);
      if (cand < best) best = cand;
    }
    form.points.push_back(best);
  }
  check_internal(static_cast<int>(form.points.size()) == h,
                 "summand count must equal gcd(n, d)");
  std::sort(form.points.begin(), form.points.end());
  return form;
}

int circle_rank(const Divisor& d, long vertex_limit) {
  const GraphPtr& host = d.host();
  require(host != nullptr, "divisor has no host graph");
  require(host->edge_count() > 0, "host must be a disjoint union of circles");
  for (int v = 0; v < host->vertex_count(); ++v)
    require(host->valence(v) == 2, "host must be a disjoint union of circles");

  JacobianData jac(SimpleModel::refine(host));
  int total = 0;
  for (int comp = 0; comp < host->component_count(); ++comp) {
    Int deg = d.degree_on_component(comp);
    int r;
    if (deg < 0) {
      r = -1;
    } else if (deg > 0) {
      r = static_cast<int>(deg) - 1;
    } else {
      Divisor part(host);
      for (const auto& [p, c] : d.coeffs())
        if (component_of_point(*host, p) == comp) part.add(p, c);
      r = jac.is_lattice(jac.abel_jacobi(part, GraphPoint::vertex(0))) ? 0 : -1;
    }
    total += r + 1;
  }
  int rank = total - 1;
  check_internal(rank == divisor_rank(d, vertex_limit),
                 "degree formula must agree with the chip-firing rank");
  return rank;
}

bool brill_noether_member(const Multidivisor& e, int r) {
  SemistableCanonicalForm form = classify_semistable(e);
  require(form.d == 0, "membership is defined for degree zero");
  if (r < 0) return true;
  int trivial = static_cast<int>(
      std::count(form.points.begin(), form.points.end(), Rat(0)));
  return trivial >= r + 1;
}

bool theta_member(const Multidivisor& e, const Multidivisor& f) {
  SemistableCanonicalForm fe = classify_semistable(e);
  require(f.cover != nullptr, "bundle has no cover");
  require(same_graph(e.cover->base(), f.cover->base()),
          "bundles must share the base circle");
  require(stability(f).stable, "twisting bundle must be stable");
  int nprime = fe.n / fe.h;
  Int dprime = fe.d / fe.h;
  require(f.rank() == nprime && bundle_degree(f) == -dprime,
          "twisting bundle slope must be opposite");
  SemistableCanonicalForm fd = classify_semistable(dual(f));
  check_internal(fd.h == 1, "a stable bundle is its own single summand");
  return std::find(fe.points.begin(), fe.points.end(), fd.points.front()) !=
         fe.points.end();
}

}  // namespace tropbun
