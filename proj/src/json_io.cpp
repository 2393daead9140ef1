#include "tropbun/json_io.hpp"

#include <fstream>
#include <sstream>

#include "tropbun/errors.hpp"

namespace tropbun {

namespace {

const Json& field(const Json& j, const char* key) {
  require(j.is_object(), "expected a JSON object");
  auto it = j.find(key);
  require(it != j.end(), std::string("missing field: ") + key);
  return *it;
}

std::string str_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  require(v.is_string(), std::string("field must be a string: ") + key);
  return v.get<std::string>();
}

Int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  require(v.is_number_integer(), std::string("field must be an integer: ") + key);
  return v.get<Int>();
}

Rat rat_field(const Json& j, const char* key) {
  return parse_rat(str_field(j, key));
}

Perm perm_from_json(const Json& j, int degree) {
  require(j.is_array(), "permutation must be an array");
  require(static_cast<int>(j.size()) == degree,
          "permutation length must equal the degree");
  Perm p;
  p.reserve(j.size());
  for (const Json& v : j) {
    require(v.is_number_integer(), "permutation entries must be integers");
    long img = v.get<long>();
    require(img >= 1 && img <= degree, "permutation entries must be 1..degree");
    p.push_back(static_cast<int>(img - 1));
  }
  require(is_perm(p), "not a permutation");
  return p;
}

Json perm_to_json(const Perm& p) {
  Json out = Json::array();
  for (int img : p) out.push_back(img + 1);
  return out;
}

}  // namespace

Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  require(!j.is_discarded(), "malformed JSON");
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

Json graph_to_json(const GraphPtr& g) {
  Json vertices = Json::array();
  for (int v = 0; v < g->vertex_count(); ++v) vertices.push_back(g->vertex_id(v));
  Json edges = Json::array();
  for (int e = 0; e < g->edge_count(); ++e) {
    const auto& ed = g->edge(e);
    edges.push_back(Json{{"id", ed.id},
                         {"src", g->vertex_id(ed.src)},
                         {"dst", g->vertex_id(ed.dst)},
                         {"length", rat_str(ed.length)}});
  }
  return Json{{"vertices", vertices}, {"edges", edges}};
}

GraphPtr graph_from_json(const Json& j) {
  const Json& vs = field(j, "vertices");
  require(vs.is_array(), "vertices must be an array");
  std::vector<std::string> vertices;
  for (const Json& v : vs) {
    require(v.is_string(), "vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }
  const Json& es = field(j, "edges");
  require(es.is_array(), "edges must be an array");
  std::vector<EdgeSpec> edges;
  for (const Json& e : es)
    edges.push_back(EdgeSpec{str_field(e, "id"), str_field(e, "src"),
                             str_field(e, "dst"), rat_field(e, "length")});
  return MetricGraph::build(std::move(vertices), std::move(edges));
}

Json point_to_json(const GraphPtr& host, const GraphPoint& p) {
  if (p.at_vertex) return Json{{"vertex", host->vertex_id(p.index)}};
  return Json{{"edge", host->edge(p.index).id}, {"offset", rat_str(p.offset)}};
}

GraphPoint point_from_json(const GraphPtr& host, const Json& j) {
  require(j.is_object(), "point must be an object");
  if (j.contains("vertex"))
    return GraphPoint::vertex(host->vertex_index(str_field(j, "vertex")));
  int e = host->edge_index(str_field(j, "edge"));
  return GraphPoint::on_edge(host, e, rat_field(j, "offset"));
}

Json divisor_to_json(const Divisor& d) {
  Json out = Json::array();
  for (const auto& [p, c] : d.coeffs())
    out.push_back(Json{{"point", point_to_json(d.host(), p)}, {"coeff", c}});
  return out;
}

Divisor divisor_from_json(const GraphPtr& host, const Json& j) {
  require(j.is_array(), "divisor must be an array");
  Divisor d(host);
  for (const Json& entry : j)
    d.add(point_from_json(host, field(entry, "point")), int_field(entry, "coeff"));
  return d;
}

Json cover_point_to_json(const FreeCover& cov, const GraphPoint& p) {
  const GraphPtr& bm = cov.base_model()->graph();
  if (p.at_vertex) {
    auto [bmv, sheet] = cov.vertex_down(p.index);
    return Json{{"vertex", bm->vertex_id(bmv)}, {"sheet", sheet + 1}};
  }
  auto [bme, sheet] = cov.edge_down(p.index);
  return Json{{"edge", bm->edge(bme).id},
              {"offset", rat_str(p.offset)},
              {"sheet", sheet + 1}};
}

GraphPoint cover_point_from_json(const FreeCover& cov, const Json& j) {
  const GraphPtr& bm = cov.base_model()->graph();
  Int sheet = int_field(j, "sheet");
  require(sheet >= 1 && sheet <= cov.degree(), "sheet out of range");
  int k = static_cast<int>(sheet - 1);
  if (j.contains("vertex"))
    return GraphPoint::vertex(
        cov.vertex_lift(bm->vertex_index(str_field(j, "vertex")), k));
  int te = cov.edge_lift(bm->edge_index(str_field(j, "edge")), k);
  return GraphPoint::on_edge(cov.total(), te, rat_field(j, "offset"));
}

Json cover_divisor_to_json(const FreeCover& cov, const Divisor& d) {
  Json out = Json::array();
  for (const auto& [p, c] : d.coeffs())
    out.push_back(Json{{"point", cover_point_to_json(cov, p)}, {"coeff", c}});
  return out;
}

Divisor cover_divisor_from_json(const CoverPtr& cov, const Json& j) {
  require(j.is_array(), "divisor must be an array");
  Divisor d(cov->total());
  for (const Json& entry : j)
    d.add(cover_point_from_json(*cov, field(entry, "point")), int_field(entry, "coeff"));
  return d;
}

Json cover_to_json(const FreeCover& cov, bool embed_graph) {
  const GraphPtr& bm = cov.base_model()->graph();
  Json sigma = Json::object();
  for (int e = 0; e < bm->edge_count(); ++e) {
    const Perm& p = cov.sigma(e);
    if (p == identity_perm(cov.degree())) continue;
    sigma[bm->edge(e).id] = perm_to_json(p);
  }
  Json out{{"degree", cov.degree()}, {"sigma", sigma}};
  if (embed_graph) out["graph"] = graph_to_json(cov.base());
  return out;
}

CoverPtr cover_from_json(const Json& j, const GraphPtr& base) {
  GraphPtr b = base;
  if (j.contains("graph")) b = graph_from_json(field(j, "graph"));
  require(b != nullptr, "cover needs a base graph");
  Int degree = int_field(j, "degree");
  require(degree >= 1 && degree <= 64, "cover degree out of range");
  std::map<std::string, Perm> sigma;
  if (j.contains("sigma")) {
    const Json& s = field(j, "sigma");
    require(s.is_object(), "sigma must be an object");
    for (auto it = s.begin(); it != s.end(); ++it)
      sigma[it.key()] = perm_from_json(it.value(), static_cast<int>(degree));
  }
  return FreeCover::build(b, static_cast<int>(degree), sigma);
}

Json multidivisor_to_json(const Multidivisor& md) {
  return Json{{"cover", cover_to_json(*md.cover, true)},
              {"divisor", cover_divisor_to_json(*md.cover, md.div)}};
}

Multidivisor multidivisor_from_json(const Json& j, const GraphPtr& base) {
  CoverPtr cov = cover_from_json(field(j, "cover"), base);
  Divisor d = cover_divisor_from_json(cov, field(j, "divisor"));
  return Multidivisor{cov, d};
}

Json cocycle_to_json(const BundleCocycle& cc) {
  const FreeCover& cov = *cc.cover;
  const GraphPtr& bm = cov.base_model()->graph();
  require(cc.fns.size() == static_cast<size_t>(bm->edge_count()),
          "cocycle edge count mismatch");
  Json edges = Json::object();
  for (int e = 0; e < bm->edge_count(); ++e) {
    require(cc.fns[e].size() == static_cast<size_t>(cov.degree()),
            "cocycle sheet count mismatch");
    Json g = Json::array();
    for (const AffineFn& fn : cc.fns[e])
      g.push_back(Json{{"slope", fn.slope}, {"const", rat_str(fn.c)}});
    edges[bm->edge(e).id] = Json{{"perm", perm_to_json(cov.sigma(e))}, {"g", g}};
  }
  return Json{{"graph", graph_to_json(cov.base())},
              {"degree", cov.degree()},
              {"edges", edges}};
}

BundleCocycle cocycle_from_json(const Json& j, const GraphPtr& base) {
  GraphPtr b = base;
  if (j.contains("graph")) b = graph_from_json(field(j, "graph"));
  require(b != nullptr, "cocycle needs a base graph");
  Int degree = int_field(j, "degree");
  require(degree >= 1 && degree <= 64, "degree out of range");
  int n = static_cast<int>(degree);

  const Json& edges = field(j, "edges");
  require(edges.is_object(), "edges must be an object");
  std::map<std::string, Perm> sigma;
  for (auto it = edges.begin(); it != edges.end(); ++it)
    sigma[it.key()] = perm_from_json(field(it.value(), "perm"), n);
  CoverPtr cov = FreeCover::build(b, n, sigma);

  const GraphPtr& bm = cov->base_model()->graph();
  BundleCocycle cc;
  cc.cover = cov;
  cc.fns.assign(bm->edge_count(), std::vector<AffineFn>(n));
  for (auto it = edges.begin(); it != edges.end(); ++it) {
    const Json& g = field(it.value(), "g");
    require(g.is_array() && static_cast<int>(g.size()) == n,
            "g must list one transition per sheet");
    int e = bm->edge_index(it.key());
    for (int k = 0; k < n; ++k) {
      const Json& fn = g[k];
      cc.fns[e][k] = AffineFn{int_field(fn, "slope"), rat_field(fn, "const")};
    }
  }
  return cc;
}

Json local_system_to_json(const LocalSystemRep& rep) {
  Json edges = Json::object();
  for (const auto& [id, entry] : rep.edges) {
    Json shifts = Json::array();
    for (const Rat& s : entry.shifts) shifts.push_back(rat_str(s));
    edges[id] = Json{{"perm", perm_to_json(entry.perm)}, {"shifts", shifts}};
  }
  return Json{{"rank", rep.rank}, {"edges", edges}};
}

LocalSystemRep local_system_from_json(const Json& j) {
  LocalSystemRep rep;
  Int rank = int_field(j, "rank");
  require(rank >= 1 && rank <= 64, "rank out of range");
  rep.rank = static_cast<int>(rank);
  const Json& edges = field(j, "edges");
  require(edges.is_object(), "edges must be an object");
  for (auto it = edges.begin(); it != edges.end(); ++it) {
    LocalSystemEdge entry;
    entry.perm = perm_from_json(field(it.value(), "perm"), rep.rank);
    const Json& shifts = field(it.value(), "shifts");
    require(shifts.is_array() && static_cast<int>(shifts.size()) == rep.rank,
            "shifts must list one value per sheet");
    for (const Json& s : shifts) {
      require(s.is_string(), "shifts must be rational strings");
      entry.shifts.push_back(parse_rat(s.get<std::string>()));
    }
    rep.edges[it.key()] = std::move(entry);
  }
  return rep;
}

Json canonical_form_to_json(const SemistableCanonicalForm& form) {
  Json points = Json::array();
  for (const Rat& x : form.points) points.push_back(rat_str(x));
  return Json{{"n", form.n},
              {"d", form.d},
              {"h", form.h},
              {"points", points},
              {"circumference", rat_str(form.circumference)}};
}

Json root_datum_to_json(const RootDatum& rd) {
  auto vectors = [](const std::vector<IntVec>& side) {
    Json out = Json::array();
    for (const IntVec& v : side) out.push_back(v);
    return out;
  };
  return Json{{"rank", rd.rank},
              {"roots", vectors(rd.roots)},
              {"coroots", vectors(rd.coroots)}};
}

RootDatum root_datum_from_json(const Json& j) {
  RootDatum rd;
  Int rank = int_field(j, "rank");
  require(rank >= 0 && rank <= 64, "rank out of range");
  rd.rank = static_cast<int>(rank);
  auto vectors = [&](const char* key) {
    const Json& side = field(j, key);
    require(side.is_array(), std::string(key) + " must be an array");
    std::vector<IntVec> out;
    for (const Json& v : side) {
      require(v.is_array(), "vectors must be arrays");
      IntVec vec;
      for (const Json& x : v) {
        require(x.is_number_integer(), "vector entries must be integers");
        vec.push_back(x.get<Int>());
      }
      out.push_back(std::move(vec));
    }
    return out;
  };
  rd.roots = vectors("roots");
  rd.coroots = vectors("coroots");
  return rd;
}

}  // namespace tropbun
