#include "tropbun/covers.hpp"

#include <algorithm>
#include <numeric>

#include "tropbun/errors.hpp"

namespace tropbun {

Perm identity_perm(int n) {
  Perm p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  check_internal(a.size() == b.size(), "permutation size mismatch");
  Perm r(a.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[static_cast<size_t>(b[i])];
  return r;
}

Perm inverse_perm(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[static_cast<size_t>(p[i])] = static_cast<int>(i);
  return r;
}

bool is_perm(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || static_cast<size_t>(x) >= p.size() || seen[static_cast<size_t>(x)])
      return false;
    seen[static_cast<size_t>(x)] = 1;
  }
  return true;
}

CoverPtr FreeCover::build(const GraphPtr& base, int degree,
                          const std::map<std::string, Perm>& sigma) {
  require(degree >= 1, "cover degree must be at least 1");
  auto cover = std::make_shared<FreeCover>();
  cover->base_ = base;
  cover->base_model_ = SimpleModel::refine(base);
  cover->degree_ = degree;
  const auto& bm = cover->base_model_->graph();

  cover->sigma_.assign(static_cast<size_t>(bm->edge_count()), identity_perm(degree));
  for (const auto& [id, perm] : sigma) {
    require(bm->has_edge(id), "sigma references unknown edge: " + id);
    require(perm.size() == static_cast<size_t>(degree) && is_perm(perm),
            "sigma for edge " + id + " is not a permutation of the sheets");
    cover->sigma_[static_cast<size_t>(bm->edge_index(id))] = perm;
  }

  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  for (int v = 0; v < bm->vertex_count(); ++v)
    for (int k = 1; k <= degree; ++k)
      vertices.push_back(bm->vertex_id(v) + "@" + std::to_string(k));
  for (int e = 0; e < bm->edge_count(); ++e) {
    const auto& spec = bm->edge(e);
    const auto& perm = cover->sigma_[static_cast<size_t>(e)];
    for (int k = 0; k < degree; ++k) {
      edges.push_back({spec.id + "@" + std::to_string(k + 1),
                       bm->vertex_id(spec.src) + "@" + std::to_string(k + 1),
                       bm->vertex_id(spec.dst) + "@" + std::to_string(perm[static_cast<size_t>(k)] + 1),
                       spec.length});
    }
  }
  cover->total_ = MetricGraph::build(std::move(vertices), std::move(edges));
  const auto& tot = cover->total_;

  cover->vlift_.assign(static_cast<size_t>(bm->vertex_count()),
                       std::vector<int>(static_cast<size_t>(degree), -1));
  cover->elift_.assign(static_cast<size_t>(bm->edge_count()),
                       std::vector<int>(static_cast<size_t>(degree), -1));
  cover->vdown_.assign(static_cast<size_t>(tot->vertex_count()), {-1, -1});
  cover->edown_.assign(static_cast<size_t>(tot->edge_count()), {-1, -1});
  for (int v = 0; v < bm->vertex_count(); ++v)
    for (int k = 0; k < degree; ++k) {
      int tv = tot->vertex_index(bm->vertex_id(v) + "@" + std::to_string(k + 1));
      cover->vlift_[static_cast<size_t>(v)][static_cast<size_t>(k)] = tv;
      cover->vdown_[static_cast<size_t>(tv)] = {v, k};
    }
  for (int e = 0; e < bm->edge_count(); ++e)
    for (int k = 0; k < degree; ++k) {
      int te = tot->edge_index(bm->edge(e).id + "@" + std::to_string(k + 1));
      cover->elift_[static_cast<size_t>(e)][static_cast<size_t>(k)] = te;
      cover->edown_[static_cast<size_t>(te)] = {e, k};
    }

  // Kruskal priority: every lift of a base forest edge first, so the total
  // forest contains them all (lifts of a forest form a forest).
  std::vector<int> priority(static_cast<size_t>(tot->edge_count()), 0);
  int next = 0;
  for (int pass = 0; pass < 2; ++pass)
    for (int e = 0; e < bm->edge_count(); ++e) {
      if (cover->base_model_->in_forest(e) != (pass == 0)) continue;
      for (int k = 0; k < degree; ++k)
        priority[static_cast<size_t>(
            cover->elift_[static_cast<size_t>(e)][static_cast<size_t>(k)])] = next++;
    }
  cover->total_model_ = SimpleModel::wrap(tot, priority);
  for (int e = 0; e < bm->edge_count(); ++e) {
    if (!cover->base_model_->in_forest(e)) continue;
    for (int k = 0; k < degree; ++k)
      check_internal(cover->total_model_->in_forest(
                         cover->elift_[static_cast<size_t>(e)][static_cast<size_t>(k)]),
                     "forest lift missing from total forest");
  }
  return cover;
}

CoverPtr FreeCover::trivial(const GraphPtr& base, int degree) {
  return build(base, degree, {});
}

int FreeCover::vertex_lift(int v, int sheet) const {
  return vlift_.at(static_cast<size_t>(v)).at(static_cast<size_t>(sheet));
}

int FreeCover::edge_lift(int e, int sheet) const {
  return elift_.at(static_cast<size_t>(e)).at(static_cast<size_t>(sheet));
}

std::pair<int, int> FreeCover::vertex_down(int tv) const {
  return vdown_.at(static_cast<size_t>(tv));
}

std::pair<int, int> FreeCover::edge_down(int te) const {
  return edown_.at(static_cast<size_t>(te));
}

GraphPoint FreeCover::lift_point(const GraphPoint& p, int sheet) const {
  require(sheet >= 0 && sheet < degree_, "sheet out of range");
  if (p.at_vertex) return GraphPoint::vertex(vertex_lift(p.index, sheet));
  return GraphPoint::on_edge(total_, edge_lift(p.index, sheet), p.offset);
}

GraphPoint FreeCover::project_point(const GraphPoint& p) const {
  if (p.at_vertex) return GraphPoint::vertex(vertex_down(p.index).first);
  return GraphPoint::on_edge(base_model_->graph(), edge_down(p.index).first, p.offset);
}

Divisor FreeCover::pullback(const Divisor& on_base) const {
  require(same_graph(on_base.host(), base_), "divisor not on the base graph");
  Divisor result(total_);
  for (const auto& [p, c] : on_base.coeffs()) {
    auto mp = base_model_->to_model(p);
    for (int k = 0; k < degree_; ++k) result.add(lift_point(mp, k), c);
  }
  return result;
}

Divisor FreeCover::pushforward(const Divisor& on_total) const {
  require(same_graph(on_total.host(), total_), "divisor not on the total space");
  Divisor result(base_);
  for (const auto& [p, c] : on_total.coeffs())
    result.add(base_model_->to_original(project_point(p)), c);
  return result;
}

namespace {

// Extend a root assignment over one base component; returns false on clash.
bool propagate_component(const FreeCover& a, const FreeCover& b, int comp,
                         const Perm& at_root, std::vector<Perm>& out) {
  const auto& bm = a.base_model()->graph();
  const auto& model = a.base_model();
  const int root = model->root_of_component(comp);
  out[static_cast<size_t>(root)] = at_root;
  // Forest-order traversal: repeatedly settle children of settled vertices.
  std::vector<int> stack{root};
  std::vector<std::vector<std::pair<int, int>>> children(
      static_cast<size_t>(bm->vertex_count()));
  for (int v = 0; v < bm->vertex_count(); ++v)
    if (model->parent_edge(v) >= 0)
      children[static_cast<size_t>(model->parent_vertex(v))].emplace_back(
          v, model->parent_edge(v));
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [child, e] : children[static_cast<size_t>(v)]) {
      // pi_dst sigma_a = sigma_b pi_src along e, whichever way e points.
      const auto& sa = a.sigma(e);
      const auto& sb = b.sigma(e);
      if (bm->edge(e).src == v) {
        out[static_cast<size_t>(child)] =
            compose(compose(sb, out[static_cast<size_t>(v)]), inverse_perm(sa));
      } else {
        out[static_cast<size_t>(child)] = compose(
            compose(inverse_perm(sb), out[static_cast<size_t>(v)]), sa);
      }
      stack.push_back(child);
    }
  }
  for (int e = 0; e < bm->edge_count(); ++e) {
    int s = bm->edge(e).src, t = bm->edge(e).dst;
    if (bm->component_of(s) != comp) continue;
    if (compose(out[static_cast<size_t>(t)], a.sigma(e)) !=
        compose(b.sigma(e), out[static_cast<size_t>(s)]))
      return false;
  }
  return true;
}

void iso_search(const FreeCover& a, const FreeCover& b, int comp,
                std::vector<Perm>& current, std::vector<CoverIso>& found) {
  const auto& bm = a.base_model()->graph();
  if (comp == bm->component_count()) {
    found.push_back(CoverIso{current});
    return;
  }
  Perm root_perm = identity_perm(a.degree());
  std::sort(root_perm.begin(), root_perm.end());
  do {
    if (propagate_component(a, b, comp, root_perm, current))
      iso_search(a, b, comp + 1, current, found);
  } while (std::next_permutation(root_perm.begin(), root_perm.end()));
}

}  // namespace

std::vector<CoverIso> cover_isomorphisms(const FreeCover& a, const FreeCover& b) {
  require(same_graph(a.base(), b.base()), "covers have different bases");
  if (a.degree() != b.degree()) return {};
  const auto& bm = a.base_model()->graph();
  std::vector<CoverIso> found;
  std::vector<Perm> current(static_cast<size_t>(bm->vertex_count()));
  iso_search(a, b, 0, current, found);
  return found;
}

std::vector<CoverIso> deck_group(const FreeCover& c) {
  return cover_isomorphisms(c, c);
}

std::vector<CoverPtr> enumerate_covers(const GraphPtr& base, int degree) {
  require(degree >= 1, "cover degree must be at least 1");
  require(base->component_count() == 1, "enumeration requires a connected base");
  auto model = SimpleModel::refine(base);
  const int genus = model->genus();

  mpz_class fact = 1;
  for (int i = 2; i <= degree; ++i) fact *= i;
  mpz_class work = 1;
  for (int j = 0; j <= genus; ++j) {
    work *= fact;
    if (work > 50000000) throw size_limit_error("cover enumeration too large");
  }

  std::vector<Perm> all;
  {
    Perm p = identity_perm(degree);
    do {
      all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  std::vector<CoverPtr> out;
  std::vector<size_t> odo(static_cast<size_t>(genus), 0);
  while (true) {
    std::vector<Perm> tuple;
    tuple.reserve(static_cast<size_t>(genus));
    for (int j = 0; j < genus; ++j) tuple.push_back(all[odo[static_cast<size_t>(j)]]);
    bool minimal = true;
    for (const auto& pi : all) {
      const auto inv = inverse_perm(pi);
      std::vector<Perm> conj;
      conj.reserve(tuple.size());
      for (const auto& s : tuple) conj.push_back(compose(compose(pi, s), inv));
      if (conj < tuple) {
        minimal = false;
        break;
      }
    }
    if (minimal) {
      std::map<std::string, Perm> sigma;
      const auto& nontree = model->nontree_edges();
      for (int j = 0; j < genus; ++j)
        sigma[model->graph()->edge(nontree[static_cast<size_t>(j)]).id] =
            tuple[static_cast<size_t>(j)];
      out.push_back(FreeCover::build(base, degree, sigma));
    }
    int j = genus - 1;
    for (; j >= 0; --j) {
      if (++odo[static_cast<size_t>(j)] < all.size()) break;
      odo[static_cast<size_t>(j)] = 0;
    }
    if (j < 0) break;
  }
  return out;
}

CoverPtr disjoint_union(const FreeCover& a, const FreeCover& b) {
  require(same_graph(a.base(), b.base()), "covers have different bases");
  const auto& bm = a.base_model()->graph();
  const int na = a.degree(), nb = b.degree();
  std::map<std::string, Perm> sigma;
  for (int e = 0; e < bm->edge_count(); ++e) {
    Perm p(static_cast<size_t>(na + nb));
    for (int k = 0; k < na; ++k) p[static_cast<size_t>(k)] = a.sigma(e)[static_cast<size_t>(k)];
    for (int k = 0; k < nb; ++k)
      p[static_cast<size_t>(na + k)] = na + b.sigma(e)[static_cast<size_t>(k)];
    sigma[bm->edge(e).id] = p;
  }
  return FreeCover::build(a.base(), na + nb, sigma);
}

int product_sheet(const FreeCover& a, const FreeCover& b, int k, int l) {
  (void)a;
  return k * b.degree() + l;
}

CoverPtr fibered_product(const FreeCover& a, const FreeCover& b) {
  require(same_graph(a.base(), b.base()), "covers have different bases");
  const auto& bm = a.base_model()->graph();
  const int na = a.degree(), nb = b.degree();
  std::map<std::string, Perm> sigma;
  for (int e = 0; e < bm->edge_count(); ++e) {
    Perm p(static_cast<size_t>(na * nb));
    for (int k = 0; k < na; ++k)
      for (int l = 0; l < nb; ++l)
        p[static_cast<size_t>(product_sheet(a, b, k, l))] = product_sheet(
            a, b, a.sigma(e)[static_cast<size_t>(k)], b.sigma(e)[static_cast<size_t>(l)]);
    sigma[bm->edge(e).id] = p;
  }
  return FreeCover::build(a.base(), na * nb, sigma);
}

}  // namespace tropbun
