#include "tropbun/divisor_theory.hpp"

#include <algorithm>
#include <sstream>

#include "tropbun/errors.hpp"

namespace tropbun {

namespace {

std::vector<GraphPoint> interior_support(const Divisor& d) {
  std::vector<GraphPoint> pts;
  for (const auto& [p, c] : d.coeffs()) {
    (void)c;
    if (!p.at_vertex) pts.push_back(p);
  }
  return pts;
}

}  // namespace

RankContext::Prepared& RankContext::prepare(const GraphPtr& host,
                                            const std::vector<GraphPoint>& interior) {
  std::vector<GraphPoint> pts = interior;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::ostringstream key;
  key << static_cast<const void*>(host.get());
  for (const auto& p : pts) {
    if (!p.at_vertex) key << "|" << p.index << ":" << rat_str(p.offset);
  }
  auto it = cache_.find(key.str());
  if (it != cache_.end()) return *it->second;

  auto prep = std::make_shared<Prepared>();
  prep->sub = subdivide_to_unit(host, pts, vertex_limit_);
  const auto& g = prep->sub.graph;
  prep->ncomp = g->component_count();
  prep->comp_of.resize(static_cast<size_t>(g->vertex_count()));
  prep->local_index.resize(static_cast<size_t>(g->vertex_count()));
  prep->comp_vertices.resize(static_cast<size_t>(prep->ncomp));
  for (int v = 0; v < g->vertex_count(); ++v) {
    int c = g->component_of(v);
    prep->comp_of[static_cast<size_t>(v)] = c;
    prep->local_index[static_cast<size_t>(v)] =
        static_cast<int>(prep->comp_vertices[static_cast<size_t>(c)].size());
    prep->comp_vertices[static_cast<size_t>(c)].push_back(v);
  }
  for (int c = 0; c < prep->ncomp; ++c) {
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g->edge_count(); ++e) {
      int a = g->edge(e).src;
      int b = g->edge(e).dst;
      if (prep->comp_of[static_cast<size_t>(a)] != c) continue;
      edges.emplace_back(prep->local_index[static_cast<size_t>(a)],
                         prep->local_index[static_cast<size_t>(b)]);
    }
    prep->engines.push_back(std::make_unique<ChipEngine>(
        static_cast<int>(prep->comp_vertices[static_cast<size_t>(c)].size()), edges));
  }
  auto [pos, inserted] = cache_.emplace(key.str(), std::move(prep));
  check_internal(inserted, "cache collision");
  return *pos->second;
}

Divisor RankContext::reduce(const Divisor& d, const GraphPoint& base) {
  const auto& host = d.host();
  require(host->component_count() == 1, "reduction requires a connected graph");
  auto interior = interior_support(d);
  if (!base.at_vertex) interior.push_back(base);
  auto& prep = prepare(host, interior);
  auto vec = prep.sub.divisor_vector(d);
  int q = prep.sub.vertex_for(base);
  auto reduced = prep.engines[0]->reduce(vec, q);
  return prep.sub.to_divisor(reduced);
}

bool RankContext::linequiv(const Divisor& a, const Divisor& b) {
  require(same_graph(a.host(), b.host()),
          "divisors live on different graphs");
  const auto& host = a.host();
  for (int c = 0; c < host->component_count(); ++c) {
    if (a.degree_on_component(c) != b.degree_on_component(c)) return false;
  }
  Divisor diff = a - b;
  auto& prep = prepare(host, interior_support(diff));
  auto vec = prep.sub.divisor_vector(diff);
  for (int c = 0; c < prep.ncomp; ++c) {
    const auto& verts = prep.comp_vertices[static_cast<size_t>(c)];
    std::vector<Int> local(verts.size());
    for (size_t i = 0; i < verts.size(); ++i)
      local[i] = vec[static_cast<size_t>(verts[i])];
    auto reduced = prep.engines[static_cast<size_t>(c)]->reduce(local, 0);
    for (Int x : reduced)
      if (x != 0) return false;
  }
  return true;
}

int RankContext::rank(const Divisor& d) {
  auto& prep = prepare(d.host(), interior_support(d));
  auto vec = prep.sub.divisor_vector(d);
  int total = 0;
  for (int c = 0; c < prep.ncomp; ++c) {
    const auto& verts = prep.comp_vertices[static_cast<size_t>(c)];
    std::vector<Int> local(verts.size());
    for (size_t i = 0; i < verts.size(); ++i)
      local[i] = vec[static_cast<size_t>(verts[i])];
    total += prep.engines[static_cast<size_t>(c)]->rank(local) + 1;
  }
  return total - 1;
}

RRCheckResult RankContext::rr_check(const Divisor& d) {
  const auto& host = d.host();
  require(host->component_count() == 1,
          "Riemann-Roch check requires a connected graph");
  Divisor k = canonical_divisor(host);
  RRCheckResult res;
  res.rank_d = rank(d);
  res.rank_residual = rank(k - d);
  res.degree = d.degree();
  res.euler = host->euler_characteristic();
  res.holds = (res.rank_d - res.rank_residual) == (res.degree + res.euler);
  return res;
}

Divisor reduce_divisor(const Divisor& d, const GraphPoint& base, long vertex_limit) {
  RankContext ctx(vertex_limit);
  return ctx.reduce(d, base);
}

bool linearly_equivalent(const Divisor& a, const Divisor& b, long vertex_limit) {
  RankContext ctx(vertex_limit);
  return ctx.linequiv(a, b);
}

int divisor_rank(const Divisor& d, long vertex_limit) {
  RankContext ctx(vertex_limit);
  return ctx.rank(d);
}

RRCheckResult riemann_roch_check(const Divisor& d, long vertex_limit) {
  RankContext ctx(vertex_limit);
  return ctx.rr_check(d);
}

}  // namespace tropbun
