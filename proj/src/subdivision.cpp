#include "tropbun/subdivision.hpp"

#include <map>
#include <string>
#include <unordered_set>

#include "tropbun/errors.hpp"

namespace tropbun {

namespace {

std::string fresh_id(std::unordered_set<std::string>& used, std::string base) {
  while (used.count(base)) base += "'";
  used.insert(base);
  return base;
}

}  // namespace

std::optional<int> UnitSubdivision::locate(const GraphPoint& p) const {
  if (p.at_vertex) return graph->vertex_index(original->vertex_id(p.index));
  const Rat pos = p.offset * Rat(scale);
  if (!is_integer(pos)) return std::nullopt;
  const long k = to_int(pos.get_num());
  return positions[p.index][static_cast<size_t>(k)];
}

int UnitSubdivision::vertex_for(const GraphPoint& p) const {
  auto v = locate(p);
  check_internal(v.has_value(), "point not on subdivision vertex");
  return *v;
}

std::vector<Int> UnitSubdivision::divisor_vector(const Divisor& d) const {
  check_internal(same_graph(d.host(), original), "divisor host mismatch");
  std::vector<Int> vec(graph->vertex_count(), 0);
  for (const auto& [p, c] : d.coeffs()) vec[static_cast<size_t>(vertex_for(p))] += c;
  return vec;
}

Divisor UnitSubdivision::to_divisor(const std::vector<Int>& vec) const {
  check_internal(vec.size() == static_cast<size_t>(graph->vertex_count()),
                 "vector length mismatch");
  Divisor d(original);
  for (size_t v = 0; v < vec.size(); ++v)
    if (vec[v] != 0) d.add(vertex_origin[v], vec[v]);
  return d;
}

UnitSubdivision subdivide_to_unit(const GraphPtr& g,
                                  const std::vector<GraphPoint>& extra,
                                  long vertex_limit) {
  std::vector<Rat> values;
  for (int e = 0; e < g->edge_count(); ++e) {
    values.push_back(g->edge(e).length);
    if (g->is_loop(e)) values.push_back(g->edge(e).length / 2);
  }
  for (const auto& p : extra) {
    if (!p.at_vertex) values.push_back(p.offset);
  }
  const mpz_class scale = denominator_lcm(values);

  // Predicted vertex count: V - E + scale * total length.
  mpz_class predicted = g->vertex_count() - g->edge_count();
  for (int e = 0; e < g->edge_count(); ++e) {
    Rat units = g->edge(e).length * Rat(scale);
    check_internal(is_integer(units) && units >= 1, "bad unit count");
    predicted += units.get_num();
  }
  if (predicted > vertex_limit)
    throw size_limit_error("subdivision needs " + predicted.get_str() +
                           " vertices, limit is " + std::to_string(vertex_limit));

  UnitSubdivision sub;
  sub.original = g;
  sub.scale = scale;

  std::unordered_set<std::string> used;
  std::vector<std::string> vertices;
  for (int v = 0; v < g->vertex_count(); ++v) {
    used.insert(g->vertex_id(v));
    vertices.push_back(g->vertex_id(v));
  }
  struct Plan {
    std::string id, src, dst;
  };
  std::vector<Plan> plans;
  // Remember ids so indices can be rebuilt after the sorted graph build.
  std::vector<std::vector<std::string>> pos_ids(static_cast<size_t>(g->edge_count()));
  std::vector<std::pair<int, long>> interior;  // (edge, scaled position) per new vertex
  std::vector<std::string> interior_ids;

  for (int e = 0; e < g->edge_count(); ++e) {
    const auto& spec = g->edge(e);
    const long units = to_int(Rat(spec.length * Rat(scale)).get_num());
    auto& ids = pos_ids[static_cast<size_t>(e)];
    ids.resize(static_cast<size_t>(units) + 1);
    ids.front() = g->vertex_id(spec.src);
    ids.back() = g->vertex_id(spec.dst);
    for (long k = 1; k < units; ++k) {
      std::string vid = fresh_id(used, spec.id + "@" + std::to_string(k));
      ids[static_cast<size_t>(k)] = vid;
      vertices.push_back(vid);
      interior.emplace_back(e, k);
      interior_ids.push_back(vid);
    }
    if (units == 1) {
      plans.push_back({spec.id, g->vertex_id(spec.src), g->vertex_id(spec.dst)});
    } else {
      for (long k = 0; k < units; ++k)
        plans.push_back({spec.id + "#" + std::to_string(k), ids[static_cast<size_t>(k)],
                         ids[static_cast<size_t>(k + 1)]});
    }
  }

  std::vector<EdgeSpec> edges;
  edges.reserve(plans.size());
  for (const auto& pl : plans) edges.push_back({pl.id, pl.src, pl.dst, rat(1)});
  sub.graph = MetricGraph::build(vertices, edges);

  sub.vertex_origin.assign(static_cast<size_t>(sub.graph->vertex_count()),
                           GraphPoint::vertex(0));
  for (int v = 0; v < g->vertex_count(); ++v)
    sub.vertex_origin[static_cast<size_t>(sub.graph->vertex_index(g->vertex_id(v)))] =
        GraphPoint::vertex(v);
  for (size_t i = 0; i < interior.size(); ++i) {
    const auto [e, k] = interior[i];
    sub.vertex_origin[static_cast<size_t>(sub.graph->vertex_index(interior_ids[i]))] =
        GraphPoint::on_edge(g, e, Rat(k) / Rat(scale));
  }

  sub.positions.resize(static_cast<size_t>(g->edge_count()));
  for (int e = 0; e < g->edge_count(); ++e) {
    auto& row = sub.positions[static_cast<size_t>(e)];
    const auto& ids = pos_ids[static_cast<size_t>(e)];
    row.resize(ids.size());
    for (size_t k = 0; k < ids.size(); ++k) row[k] = sub.graph->vertex_index(ids[k]);
  }
  return sub;
}

}  // namespace tropbun
