#include "tropbun/bundles.hpp"

#include <algorithm>
#include <array>

#include "tropbun/errors.hpp"
#include "tropbun/jacobian.hpp"

namespace tropbun {
namespace {

// Per total edge: transition slope and constant in the src-based coordinate.
struct TotalCocycle {
  std::vector<Int> m;
  std::vector<Rat> c;
};

// Total vertices in BFS order from the forest roots (nondecreasing depth).
std::vector<int> forest_order(const ModelPtr& tm, int nv) {
  std::vector<std::vector<int>> children(nv);
  std::vector<int> order;
  order.reserve(nv);
  for (int v = 0; v < nv; ++v) {
    if (tm->parent_edge(v) < 0)
      order.push_back(v);
    else
      children[tm->parent_vertex(v)].push_back(v);
  }
  for (size_t i = 0; i < order.size(); ++i)
    for (int w : children[order[i]]) order.push_back(w);
  check_internal(static_cast<int>(order.size()) == nv, "forest traversal incomplete");
  return order;
}

// Shift constants by a potential that vanishes on the forest: every tree
// edge ends with constant zero, non-tree constants absorb the difference.
void regauge_forest(const GraphPtr& t, const ModelPtr& tm, std::vector<Rat>& c) {
  int nv = t->vertex_count();
  std::vector<Rat> kappa(nv, Rat(0));
  for (int v : forest_order(tm, nv)) {
    int e = tm->parent_edge(v);
    if (e < 0) continue;
    const auto& ed = t->edge(e);
    if (ed.dst == v)
      kappa[v] = c[e] + kappa[ed.src];
    else
      kappa[v] = kappa[ed.dst] - c[e];
  }
  for (int e = 0; e < t->edge_count(); ++e) {
    const auto& ed = t->edge(e);
    c[e] += kappa[ed.src] - kappa[ed.dst];
    if (tm->in_forest(e)) check_internal(c[e] == 0, "forest constant survived regauge");
  }
}

TotalCocycle star_solve(const FreeCover& cov, const Divisor& d) {
  const GraphPtr& t = cov.total();
  const ModelPtr& tm = cov.total_model();
  require(same_graph(d.host(), t), "divisor must live on the cover's total space");
  int ne = t->edge_count(), nv = t->vertex_count();

  std::vector<std::vector<std::pair<Rat, Int>>> chips(ne);
  std::vector<Int> vertex_chips(nv, 0);
  for (const auto& [p, coeff] : d.coeffs()) {
    if (p.at_vertex)
      vertex_chips[p.index] = coeff;
    else
      chips[p.index].emplace_back(p.offset, coeff);
  }

  // Outgoing slope of the local potential per half-edge: the vertex chips go
  // to the first incident half-edge, non-forest edges preferred.
  std::vector<std::array<Int, 2>> alpha(ne, {0, 0});
  for (int v = 0; v < nv; ++v) {
    if (vertex_chips[v] == 0) continue;
    const auto& inc = t->incident(v);
    check_internal(!inc.empty(), "chips on an isolated vertex");
    std::pair<int, int> slot = inc.front();
    for (const auto& he : inc)
      if (!tm->in_forest(he.first)) {
        slot = he;
        break;
      }
    alpha[slot.first][slot.second] += vertex_chips[v];
  }

  TotalCocycle out;
  out.m.assign(ne, 0);
  out.c.assign(ne, Rat(0));
  for (int e = 0; e < ne; ++e) {
    Int interior = 0;
    for (const auto& ch : chips[e]) interior += ch.second;
    out.m[e] = alpha[e][0] + alpha[e][1] + interior;
    // Constant = -phi_dst(src end): integrate the dst-based potential, whose
    // slope starts at the dst half-edge allocation and picks up each chip.
    const auto& ed = t->edge(e);
    Rat value(0), y(0);
    Rat slope = rat_of(alpha[e][1]);
    for (auto it = chips[e].rbegin(); it != chips[e].rend(); ++it) {
      Rat ychip = ed.length - it->first;
      value += slope * (ychip - y);
      y = ychip;
      slope += rat_of(it->second);
    }
    value += slope * (ed.length - y);
    out.c[e] = -value;
  }
  regauge_forest(t, tm, out.c);
  return out;
}

// Gauge away all slopes of a componentwise-degree-zero cocycle by an integer
// flow supported on the forest, updating the constants in place.
void kill_slopes(const GraphPtr& t, const ModelPtr& tm, std::vector<Int>& m,
                 std::vector<Rat>& c) {
  int ne = t->edge_count(), nv = t->vertex_count();
  std::vector<Int> excess(nv, 0);
  for (int e = 0; e < ne; ++e) excess[t->edge(e).dst] += m[e];
  std::vector<Int> alpha(ne, 0);
  auto order = forest_order(tm, nv);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    int e = tm->parent_edge(v);
    if (e < 0) {
      check_internal(excess[v] == 0, "slope flow does not balance");
      continue;
    }
    alpha[e] = t->edge(e).src == v ? excess[v] : -excess[v];
    excess[tm->parent_vertex(v)] += excess[v];
  }
  for (int e = 0; e < ne; ++e) {
    Int beta = -m[e] - alpha[e];
    c[e] -= rat_of(beta) * t->edge(e).length;
    m[e] = 0;
  }
}

// Jacobian coordinates of the flat cocycle, reduced to the fundamental domain.
std::vector<Rat> flat_class(const JacobianData& jac, const ModelPtr& tm,
                            const std::vector<Rat>& c) {
  int g = jac.genus();
  std::vector<Rat> v(g, Rat(0));
  for (int j = 0; j < g; ++j)
    for (const auto& [e, s] : tm->cycles()[j].coeff) v[j] -= rat(s) * c[e];
  if (g == 0) return v;
  auto x = jac.solve_gram(v);
  for (int j = 0; j < g; ++j) {
    Int fl = rat_floor_div(x[j], Rat(1));
    if (fl == 0) continue;
    for (int i = 0; i < g; ++i) v[i] -= rat_of(fl) * jac.gram()[i][j];
  }
  return v;
}

TotalCocycle by_total_edge(const BundleCocycle& cc) {
  const FreeCover& cov = *cc.cover;
  int nbe = cov.base_model()->graph()->edge_count();
  int n = cov.degree();
  require(static_cast<int>(cc.fns.size()) == nbe, "cocycle edge count mismatch");
  TotalCocycle tot;
  tot.m.assign(cov.total()->edge_count(), 0);
  tot.c.assign(cov.total()->edge_count(), Rat(0));
  for (int e = 0; e < nbe; ++e) {
    require(static_cast<int>(cc.fns[e].size()) == n, "cocycle sheet count mismatch");
    for (int k = 0; k < n; ++k) {
      int te = cov.edge_lift(e, k);
      tot.m[te] = cc.fns[e][k].slope;
      tot.c[te] = cc.fns[e][k].c;
    }
  }
  return tot;
}

// Point of the union / product total space matching a point of a factor.
GraphPoint resheet(const GraphPoint& p, const FreeCover& from, const FreeCover& to,
                   int new_sheet) {
  if (p.at_vertex) {
    auto [bmv, k] = from.vertex_down(p.index);
    (void)k;
    return GraphPoint::vertex(to.vertex_lift(bmv, new_sheet));
  }
  auto [bme, k] = from.edge_down(p.index);
  (void)k;
  return GraphPoint::on_edge(to.total(), to.edge_lift(bme, new_sheet), p.offset);
}

}  // namespace

BundleCocycle cocycle_of(const Multidivisor& md) {
  TotalCocycle tot = star_solve(*md.cover, md.div);
  const FreeCover& cov = *md.cover;
  int nbe = cov.base_model()->graph()->edge_count();
  int n = cov.degree();
  BundleCocycle cc;
  cc.cover = md.cover;
  cc.fns.assign(nbe, std::vector<AffineFn>(n));
  for (int e = 0; e < nbe; ++e)
    for (int k = 0; k < n; ++k) {
      int te = cov.edge_lift(e, k);
      cc.fns[e][k] = AffineFn{tot.m[te], tot.c[te]};
    }
  return cc;
}

Multidivisor multidivisor_of(const BundleCocycle& cc) {
  const FreeCover& cov = *cc.cover;
  const GraphPtr& t = cov.total();
  const ModelPtr& tm = cov.total_model();
  TotalCocycle tot = by_total_edge(cc);
  int ne = t->edge_count();

  std::vector<Int> comp_degree(t->component_count(), 0);
  for (int e = 0; e < ne; ++e) comp_degree[t->component_of(t->edge(e).src)] += tot.m[e];
  Divisor ref(t);
  for (int comp = 0; comp < t->component_count(); ++comp)
    if (comp_degree[comp] != 0)
      ref.add(GraphPoint::vertex(tm->root_of_component(comp)), comp_degree[comp]);

  TotalCocycle base = star_solve(cov, ref);
  for (int e = 0; e < ne; ++e) {
    tot.m[e] -= base.m[e];
    tot.c[e] -= base.c[e];
  }
  kill_slopes(t, tm, tot.m, tot.c);

  JacobianData jac(tm);
  std::vector<Rat> cls = flat_class(jac, tm, tot.c);
  Divisor extra = jac.divisor_from_jac(cls, 0, GraphPoint::vertex(0));
  return Multidivisor{cc.cover, ref + extra};
}

Multidivisor direct_sum(const Multidivisor& a, const Multidivisor& b) {
  require(same_graph(a.cover->base(), b.cover->base()), "summands must share a base");
  CoverPtr u = disjoint_union(*a.cover, *b.cover);
  int na = a.cover->degree();
  Divisor d(u->total());
  for (const auto& [p, coeff] : a.div.coeffs()) {
    int sheet = p.at_vertex ? a.cover->vertex_down(p.index).second
                            : a.cover->edge_down(p.index).second;
    d.add(resheet(p, *a.cover, *u, sheet), coeff);
  }
  for (const auto& [p, coeff] : b.div.coeffs()) {
    int sheet = p.at_vertex ? b.cover->vertex_down(p.index).second
                            : b.cover->edge_down(p.index).second;
    d.add(resheet(p, *b.cover, *u, na + sheet), coeff);
  }
  return Multidivisor{u, d};
}

Multidivisor tensor(const Multidivisor& a, const Multidivisor& b) {
  require(same_graph(a.cover->base(), b.cover->base()), "factors must share a base");
  CoverPtr f = fibered_product(*a.cover, *b.cover);
  int na = a.cover->degree(), nb = b.cover->degree();
  Divisor d(f->total());
  for (const auto& [p, coeff] : a.div.coeffs()) {
    int k = p.at_vertex ? a.cover->vertex_down(p.index).second
                        : a.cover->edge_down(p.index).second;
    for (int l = 0; l < nb; ++l)
      d.add(resheet(p, *a.cover, *f, product_sheet(*a.cover, *b.cover, k, l)), coeff);
  }
  for (const auto& [p, coeff] : b.div.coeffs()) {
    int l = p.at_vertex ? b.cover->vertex_down(p.index).second
                        : b.cover->edge_down(p.index).second;
    for (int k = 0; k < na; ++k)
      d.add(resheet(p, *b.cover, *f, product_sheet(*a.cover, *b.cover, k, l)), coeff);
  }
  return Multidivisor{f, d};
}

Multidivisor dual(const Multidivisor& a) { return Multidivisor{a.cover, -a.div}; }

std::vector<Multidivisor> summands(const Multidivisor& a) {
  const FreeCover& cov = *a.cover;
  require(cov.base()->component_count() == 1, "summand split needs a connected base");
  const GraphPtr& t = cov.total();
  const GraphPtr& bmg = cov.base_model()->graph();
  int n = cov.degree(), ncomp = t->component_count();

  // Fiberwise sheet relabeling: position of each sheet within its component's
  // fiber over each base model vertex, in sorted sheet order.
  std::vector<std::vector<int>> pos(bmg->vertex_count(), std::vector<int>(n, -1));
  std::vector<std::vector<std::vector<int>>> fibers(
      ncomp, std::vector<std::vector<int>>(bmg->vertex_count()));
  for (int bmv = 0; bmv < bmg->vertex_count(); ++bmv)
    for (int k = 0; k < n; ++k) {
      int comp = t->component_of(cov.vertex_lift(bmv, k));
      pos[bmv][k] = static_cast<int>(fibers[comp][bmv].size());
      fibers[comp][bmv].push_back(k);
    }

  std::vector<Multidivisor> out;
  out.reserve(ncomp);
  for (int comp = 0; comp < ncomp; ++comp) {
    int m = static_cast<int>(fibers[comp][0].size());
    std::map<std::string, Perm> sigma;
    for (int e = 0; e < bmg->edge_count(); ++e) {
      int s = bmg->edge(e).src, dd = bmg->edge(e).dst;
      Perm p(m);
      for (int i = 0; i < m; ++i) p[i] = pos[dd][cov.sigma(e)[fibers[comp][s][i]]];
      sigma[bmg->edge(e).id] = p;
    }
    CoverPtr sub = FreeCover::build(cov.base(), m, sigma);
    Divisor d(sub->total());
    for (const auto& [p, coeff] : a.div.coeffs()) {
      if (p.at_vertex) {
        auto [bmv, k] = cov.vertex_down(p.index);
        if (t->component_of(p.index) != comp) continue;
        d.add(GraphPoint::vertex(sub->vertex_lift(bmv, pos[bmv][k])), coeff);
      } else {
        auto [bme, k] = cov.edge_down(p.index);
        if (t->component_of(t->edge(p.index).src) != comp) continue;
        int s = bmg->edge(bme).src;
        d.add(GraphPoint::on_edge(sub->total(), sub->edge_lift(bme, pos[s][k]), p.offset),
              coeff);
      }
    }
    out.push_back(Multidivisor{sub, d});
  }
  return out;
}

Multidivisor pullback_bundle(const CoverPtr& f, const Multidivisor& e) {
  require(same_graph(e.cover->base(), f->base()), "bundle must live on the cover's base");
  const FreeCover& g = *e.cover;
  const GraphPtr& up = f->total();
  int n = g.degree();

  // Over each edge of the upstairs graph (a lift of a base model edge), the
  // pulled back cocycle repeats the downstairs permutation.
  std::map<std::string, Perm> sigma;
  for (int te = 0; te < up->edge_count(); ++te) {
    int bme = f->edge_down(te).first;
    sigma[up->edge(te).id] = g.sigma(bme);
  }
  CoverPtr cov = FreeCover::build(up, n, sigma);

  // The new total's model edge (lift of e in sheet k of f) with sheet j maps
  // to e's lift in sheet j of g; chips of D repeat over the f-sheets.
  check_internal(same_graph(cov->base_model()->graph(), up),
                 "upstairs graph needed no model split");
  Divisor d(cov->total());
  for (const auto& [p, coeff] : e.div.coeffs()) {
    if (p.at_vertex) {
      auto [bmv, j] = g.vertex_down(p.index);
      for (int k = 0; k < f->degree(); ++k) {
        int upv = f->vertex_lift(bmv, k);
        d.add(GraphPoint::vertex(cov->vertex_lift(upv, j)), coeff);
      }
    } else {
      auto [bme, j] = g.edge_down(p.index);
      for (int k = 0; k < f->degree(); ++k) {
        int upe = f->edge_lift(bme, k);
        d.add(GraphPoint::on_edge(cov->total(), cov->edge_lift(upe, j), p.offset), coeff);
      }
    }
  }
  return Multidivisor{cov, d};
}

Multidivisor pushforward_bundle(const CoverPtr& f, const Multidivisor& e) {
  require(same_graph(e.cover->base(), f->total()),
          "bundle must live on the cover's total space");
  const FreeCover& g = *e.cover;
  int nf = f->degree(), ng = g.degree();
  const GraphPtr& bmg = f->base_model()->graph();
  const GraphPtr& upm = g.base_model()->graph();
  check_internal(same_graph(upm, f->total()), "total space acquired extra model vertices");

  // Composite sheets (k, j) flattened as k * ng + j.
  std::map<std::string, Perm> sigma;
  for (int bme = 0; bme < bmg->edge_count(); ++bme) {
    Perm p(static_cast<size_t>(nf) * ng);
    for (int k = 0; k < nf; ++k) {
      int upe = f->edge_lift(bme, k);
      for (int j = 0; j < ng; ++j)
        p[static_cast<size_t>(k) * ng + j] = f->sigma(bme)[k] * ng + g.sigma(upe)[j];
    }
    sigma[bmg->edge(bme).id] = p;
  }
  CoverPtr cov = FreeCover::build(f->base(), nf * ng, sigma);

  Divisor d(cov->total());
  for (const auto& [p, coeff] : e.div.coeffs()) {
    if (p.at_vertex) {
      auto [upv, j] = g.vertex_down(p.index);
      auto [bmv, k] = f->vertex_down(upv);
      d.add(GraphPoint::vertex(cov->vertex_lift(bmv, k * ng + j)), coeff);
    } else {
      auto [upe, j] = g.edge_down(p.index);
      auto [bme, k] = f->edge_down(upe);
      d.add(GraphPoint::on_edge(cov->total(), cov->edge_lift(bme, k * ng + j), p.offset),
            coeff);
    }
  }
  return Multidivisor{cov, d};
}

Multidivisor determinant(const Multidivisor& a) {
  CoverPtr one = FreeCover::trivial(a.cover->base(), 1);
  return Multidivisor{one, one->pullback(a.cover->pushforward(a.div))};
}

Multidivisor line_bundle(const GraphPtr& base, const Divisor& d) {
  require(same_graph(d.host(), base), "divisor must live on the given base");
  CoverPtr one = FreeCover::trivial(base, 1);
  return Multidivisor{one, one->pullback(d)};
}

Int bundle_degree(const Multidivisor& a) {
  Int by_div = a.div.degree();
  BundleCocycle cc = cocycle_of(a);
  Int by_slopes = 0;
  for (const auto& edge : cc.fns)
    for (const auto& fn : edge) by_slopes += fn.slope;
  check_internal(by_div == by_slopes, "divisor degree disagrees with slope sum");
  return by_div;
}

int bn_rank_bundle(const Multidivisor& a, long vertex_limit) {
  return divisor_rank(a.div, vertex_limit);
}

Divisor transport_divisor(const CoverIso& iso, const FreeCover& a,
                          const FreeCover& b, const Divisor& d) {
  Divisor out(b.total());
  const GraphPtr& bm = a.base_model()->graph();
  for (const auto& [p, coeff] : d.coeffs()) {
    if (p.at_vertex) {
      auto [bmv, k] = a.vertex_down(p.index);
      out.add(GraphPoint::vertex(b.vertex_lift(bmv, iso.vperm[bmv][k])), coeff);
    } else {
      auto [bme, k] = a.edge_down(p.index);
      int src = bm->edge(bme).src;
      int te = b.edge_lift(bme, iso.vperm[src][k]);
      out.add(GraphPoint::on_edge(b.total(), te, p.offset), coeff);
    }
  }
  return out;
}

bool bundle_iso(const Multidivisor& a, const Multidivisor& b, long vertex_limit) {
  if (a.cover->degree() != b.cover->degree()) return false;
  if (a.div.degree() != b.div.degree()) return false;
  auto isos = cover_isomorphisms(*a.cover, *b.cover);
  if (isos.empty()) return false;
  RankContext ctx(vertex_limit);
  for (const auto& iso : isos) {
    Divisor moved = transport_divisor(iso, *a.cover, *b.cover, a.div);
    if (ctx.linequiv(moved, b.div)) return true;
  }
  return false;
}

StabilityResult stability(const Multidivisor& a) {
  require(a.cover->base()->component_count() == 1, "stability needs a connected base");
  const GraphPtr& t = a.cover->total();
  int ncomp = t->component_count();
  std::vector<int> sheets(ncomp, 0);
  for (int k = 0; k < a.cover->degree(); ++k)
    sheets[t->component_of(a.cover->vertex_lift(0, k))]++;

  StabilityResult res;
  res.slope = rat_of(a.div.degree()) / rat_of(a.cover->degree());
  res.component_slopes.reserve(ncomp);
  for (int comp = 0; comp < ncomp; ++comp) {
    check_internal(sheets[comp] > 0, "cover component with no sheets");
    res.component_slopes.push_back(rat_of(a.div.degree_on_component(comp)) /
                                   rat_of(sheets[comp]));
  }
  res.semistable = true;
  for (const Rat& mu : res.component_slopes)
    if (mu != res.slope) res.semistable = false;
  res.stable = ncomp == 1;
  return res;
}

WRRResult wrr_check(const Multidivisor& a, long vertex_limit) {
  const GraphPtr& base = a.cover->base();
  Multidivisor canon = line_bundle(base, canonical_divisor(base));
  Multidivisor twisted = tensor(canon, dual(a));

  WRRResult res;
  RankContext ctx(vertex_limit);
  res.rank_e = ctx.rank(a.div);
  res.rank_twisted = ctx.rank(twisted.div);
  res.degree = bundle_degree(a);
  res.n = a.cover->degree();
  res.euler = base->euler_characteristic();
  res.holds = res.rank_e - res.rank_twisted == res.degree + res.n * res.euler;
  return res;
}

LocalSystemRep to_local_system(const Multidivisor& a) {
  for (int comp = 0; comp < a.cover->total()->component_count(); ++comp)
    require(a.div.degree_on_component(comp) == 0,
            "local system requires degree zero on every component");

  // Regauge the sheet labels so the cover permutations are the identity on
  // the base spanning forest, then express the bundle there.
  const FreeCover& cov = *a.cover;
  const ModelPtr& bm = cov.base_model();
  const GraphPtr& bmg = bm->graph();
  int n = cov.degree();
  std::vector<Perm> pi(bmg->vertex_count());
  for (int v : forest_order(bm, bmg->vertex_count())) {
    int e = bm->parent_edge(v);
    if (e < 0) {
      pi[v] = identity_perm(n);
      continue;
    }
    const auto& ed = bmg->edge(e);
    // The normalized permutation pi_dst . sigma_e . pi_src^-1 must be trivial.
    if (ed.dst == v)
      pi[v] = compose(pi[ed.src], inverse_perm(cov.sigma(e)));
    else
      pi[v] = compose(pi[ed.dst], cov.sigma(e));
  }
  std::map<std::string, Perm> sigma;
  for (int e = 0; e < bmg->edge_count(); ++e) {
    if (bm->in_forest(e)) continue;
    const auto& ed = bmg->edge(e);
    sigma[ed.id] = compose(compose(pi[ed.dst], cov.sigma(e)), inverse_perm(pi[ed.src]));
  }
  CoverPtr canon = FreeCover::build(cov.base(), n, sigma);
  Divisor moved = transport_divisor(CoverIso{pi}, cov, *canon, a.div);

  TotalCocycle tot = star_solve(*canon, moved);
  kill_slopes(canon->total(), canon->total_model(), tot.m, tot.c);
  regauge_forest(canon->total(), canon->total_model(), tot.c);

  LocalSystemRep rep;
  rep.rank = n;
  for (int e = 0; e < bmg->edge_count(); ++e) {
    if (bm->in_forest(e)) continue;
    LocalSystemEdge entry;
    entry.perm = canon->sigma(e);
    entry.shifts.reserve(n);
    for (int k = 0; k < n; ++k) entry.shifts.push_back(-tot.c[canon->edge_lift(e, k)]);
    rep.edges[bmg->edge(e).id] = std::move(entry);
  }
  return rep;
}

Multidivisor from_local_system(const GraphPtr& base, const LocalSystemRep& rep) {
  require(rep.rank >= 1, "local system rank must be positive");
  std::map<std::string, Perm> sigma;
  for (const auto& [id, entry] : rep.edges) sigma[id] = entry.perm;
  CoverPtr cov = FreeCover::build(base, rep.rank, sigma);
  const GraphPtr& bm = cov->base_model()->graph();

  BundleCocycle cc;
  cc.cover = cov;
  cc.fns.assign(bm->edge_count(), std::vector<AffineFn>(rep.rank));
  for (const auto& [id, entry] : rep.edges) {
    require(bm->has_edge(id), "local system names unknown edge " + id);
    require(static_cast<int>(entry.shifts.size()) == rep.rank,
            "local system shift count mismatch on edge " + id);
    int e = bm->edge_index(id);
    for (int k = 0; k < rep.rank; ++k) cc.fns[e][k] = AffineFn{0, -entry.shifts[k]};
  }
  return multidivisor_of(cc);
}

TropMatrix cocycle_matrix(const BundleCocycle& cc, int base_model_edge) {
  require(cc.cover != nullptr, "cocycle has no cover");
  const GraphPtr& bmg = cc.cover->base_model()->graph();
  require(base_model_edge >= 0 && base_model_edge < bmg->edge_count(),
          "edge index out of range");
  by_total_edge(cc);
  int n = cc.cover->degree();
  const Perm& p = cc.cover->sigma(base_model_edge);
  TropMatrix t(n, std::vector<TropEntry>(n));
  for (int j = 0; j < n; ++j) t[p[j]][j] = cc.fns[base_model_edge][j];
  return t;
}

bool trop_invertible(const TropMatrix& t) {
  int n = static_cast<int>(t.size());
  std::vector<int> col_hits(n, 0);
  for (int i = 0; i < n; ++i) {
    require(static_cast<int>(t[i].size()) == n, "matrix must be square");
    int finite = 0;
    for (int j = 0; j < n; ++j) {
      if (!t[i][j]) continue;
      ++finite;
      ++col_hits[j];
    }
    if (finite != 1) return false;
  }
  for (int j = 0; j < n; ++j)
    if (col_hits[j] != 1) return false;
  return true;
}

AffineFn trop_det(const TropMatrix& t) {
  require(trop_invertible(t), "tropical determinant requires an invertible matrix");
  AffineFn det;
  for (const auto& row : t)
    for (const auto& entry : row)
      if (entry) {
        det.slope += entry->slope;
        det.c += entry->c;
      }
  return det;
}

std::pair<TropMatrix, TropMatrix> split_block_triangular(const TropMatrix& t, int m) {
  int n = static_cast<int>(t.size());
  require(trop_invertible(t), "block split requires an invertible matrix");
  require(m > 0 && m < n, "block size must be a proper split");
  for (int i = 0; i < m; ++i)
    for (int j = m; j < n; ++j)
      require(!t[i][j] && !t[j][i], "matrix does not preserve the leading block");
  TropMatrix top(m, std::vector<TropEntry>(m));
  TropMatrix bottom(n - m, std::vector<TropEntry>(n - m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) top[i][j] = t[i][j];
  for (int i = m; i < n; ++i)
    for (int j = m; j < n; ++j) bottom[i - m][j - m] = t[i][j];
  return {std::move(top), std::move(bottom)};
}

}  // namespace tropbun
