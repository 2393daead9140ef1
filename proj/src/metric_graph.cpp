#include "tropbun/metric_graph.hpp"

#include <algorithm>
#include <numeric>

namespace tropbun {

GraphPtr MetricGraph::build(std::vector<std::string> vertices,
                            std::vector<EdgeSpec> edges) {
  auto g = std::make_shared<MetricGraph>();
  require(!vertices.empty(), "graph needs at least one vertex");
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    require(vertices[i] != vertices[i + 1],
            "duplicate vertex id '" + vertices[i] + "'");
  g->vertex_ids_ = std::move(vertices);
  for (int i = 0; i < g->vertex_count(); ++i)
    g->vertex_lookup_[g->vertex_ids_[i]] = i;

  std::sort(edges.begin(), edges.end(),
            [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    require(edges[i].id != edges[i + 1].id,
            "duplicate edge id '" + edges[i].id + "'");
  for (const EdgeSpec& e : edges) {
    require(e.length > 0, "edge '" + e.id + "' needs positive length");
    Edge edge;
    edge.id = e.id;
    auto s = g->vertex_lookup_.find(e.src);
    auto t = g->vertex_lookup_.find(e.dst);
    require(s != g->vertex_lookup_.end(),
            "edge '" + e.id + "' references unknown vertex '" + e.src + "'");
    require(t != g->vertex_lookup_.end(),
            "edge '" + e.id + "' references unknown vertex '" + e.dst + "'");
    edge.src = s->second;
    edge.dst = t->second;
    edge.length = e.length;
    g->edge_lookup_[edge.id] = g->edge_count();
    g->edges_.push_back(std::move(edge));
  }

  g->incident_.assign(g->vertex_count(), {});
  for (int e = 0; e < g->edge_count(); ++e) {
    g->incident_[g->edges_[e].src].emplace_back(e, 0);
    g->incident_[g->edges_[e].dst].emplace_back(e, 1);
  }
  for (auto& inc : g->incident_) std::sort(inc.begin(), inc.end());

  // Components via union-find, renumbered by lowest vertex index.
  std::vector<int> uf(g->vertex_count());
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&uf](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (const Edge& e : g->edges_) {
    int a = find(e.src), b = find(e.dst);
    if (a != b) uf[std::max(a, b)] = std::min(a, b);
  }
  g->component_.assign(g->vertex_count(), -1);
  for (int v = 0; v < g->vertex_count(); ++v) {
    int root = find(v);
    if (g->component_[root] < 0) g->component_[root] = g->component_count_++;
    g->component_[v] = g->component_[root];
  }
  return g;
}

int MetricGraph::vertex_index(const std::string& id) const {
  auto it = vertex_lookup_.find(id);
  require(it != vertex_lookup_.end(), "unknown vertex '" + id + "'");
  return it->second;
}

int MetricGraph::edge_index(const std::string& id) const {
  auto it = edge_lookup_.find(id);
  require(it != edge_lookup_.end(), "unknown edge '" + id + "'");
  return it->second;
}

Rat MetricGraph::total_length() const {
  Rat t(0);
  for (const Edge& e : edges_) t += e.length;
  return t;
}

int MetricGraph::euler_characteristic() const {
  return vertex_count() - edge_count();
}

std::vector<int> MetricGraph::genus_per_component() const {
  std::vector<int> chi(component_count_, 0);
  for (int v = 0; v < vertex_count(); ++v) chi[component_[v]] += 1;
  for (const Edge& e : edges_) chi[component_[e.src]] -= 1;
  std::vector<int> genus(component_count_);
  for (int c = 0; c < component_count_; ++c) genus[c] = 1 - chi[c];
  return genus;
}

bool same_graph(const GraphPtr& a, const GraphPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->vertex_count() != b->vertex_count() ||
      a->edge_count() != b->edge_count())
    return false;
  for (int v = 0; v < a->vertex_count(); ++v)
    if (a->vertex_id(v) != b->vertex_id(v)) return false;
  for (int e = 0; e < a->edge_count(); ++e) {
    const auto &x = a->edge(e), &y = b->edge(e);
    if (x.id != y.id || x.src != y.src || x.dst != y.dst ||
        x.length != y.length)
      return false;
  }
  return true;
}

GraphPoint GraphPoint::on_edge(const MetricGraph& g, int e, const Rat& offset) {
  const auto& edge = g.edge(e);
  require(offset >= 0 && offset <= edge.length,
          "point offset outside edge '" + edge.id + "'");
  if (offset == 0) return vertex(edge.src);
  if (offset == edge.length) return vertex(edge.dst);
  return GraphPoint{false, e, offset};
}

std::string point_str(const MetricGraph& g, const GraphPoint& p) {
  if (p.at_vertex) return g.vertex_id(p.index);
  return g.edge(p.index).id + "@" + rat_str(p.offset);
}

void Divisor::add(const GraphPoint& p, Int c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Int Divisor::coeff(const GraphPoint& p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? 0 : it->second;
}

Int Divisor::degree() const {
  Int d = 0;
  for (const auto& [p, c] : coeffs_) d += c;
  return d;
}

bool Divisor::is_effective() const {
  for (const auto& [p, c] : coeffs_)
    if (c < 0) return false;
  return true;
}

Divisor Divisor::operator+(const Divisor& o) const {
  check_internal(same_graph(host_, o.host_), "divisor hosts differ");
  Divisor r = *this;
  for (const auto& [p, c] : o.coeffs_) r.add(p, c);
  return r;
}

Divisor Divisor::operator-(const Divisor& o) const {
  check_internal(same_graph(host_, o.host_), "divisor hosts differ");
  Divisor r = *this;
  for (const auto& [p, c] : o.coeffs_) r.add(p, -c);
  return r;
}

Divisor Divisor::operator-() const {
  Divisor r(host_);
  for (const auto& [p, c] : coeffs_) r.add(p, -c);
  return r;
}

Divisor Divisor::operator*(Int k) const {
  Divisor r(host_);
  if (k != 0)
    for (const auto& [p, c] : coeffs_) r.add(p, c * k);
  return r;
}

Int Divisor::degree_on_component(int comp) const {
  Int d = 0;
  for (const auto& [p, c] : coeffs_)
    if (component_of_point(*host_, p) == comp) d += c;
  return d;
}

int component_of_point(const MetricGraph& g, const GraphPoint& p) {
  int v = p.at_vertex ? p.index : g.edge(p.index).src;
  return g.component_of(v);
}

Divisor canonical_divisor(const GraphPtr& g) {
  Divisor k(g);
  for (int v = 0; v < g->vertex_count(); ++v)
    k.add(GraphPoint::vertex(v), g->valence(v) - 2);
  return k;
}

}  // namespace tropbun
