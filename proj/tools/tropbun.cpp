#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tropbun/bundles.hpp"
#include "tropbun/covers.hpp"
#include "tropbun/divisor_theory.hpp"
#include "tropbun/elliptic.hpp"
#include "tropbun/errors.hpp"
#include "tropbun/jacobian.hpp"
#include "tropbun/json_io.hpp"
#include "tropbun/metric_graph.hpp"
#include "tropbun/root_datum.hpp"
#include "tropbun/simple_model.hpp"
#include "tropbun/standard_graphs.hpp"
#include "tropbun/suite.hpp"

namespace tropbun {

namespace {

struct Opts {
  std::string graph, divisor, divisor2, cover, cover2, bundle, bundle2, datum;
  std::string base;
  Int degree = 0;
  int rank = 0;
  long limit = 0;
};

// --limit beats TROPBUN_LIMIT beats the built-in default.
long effective_limit(const Opts& o, long fallback) {
  if (o.limit > 0) return o.limit;
  if (const char* env = std::getenv("TROPBUN_LIMIT")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    require(end != env && *end == '\0' && v > 0,
            "TROPBUN_LIMIT must be a positive integer");
    return v;
  }
  return fallback;
}

GraphPtr need_graph(const Opts& o) {
  require(!o.graph.empty(), "missing --graph");
  return graph_from_json(load_json_file(o.graph));
}

Divisor need_divisor(const GraphPtr& g, const std::string& path,
                     const char* flag) {
  require(!path.empty(), std::string("missing --") + flag);
  return divisor_from_json(g, load_json_file(path));
}

GraphPoint base_point(const GraphPtr& g, const Opts& o) {
  if (o.base.empty()) return GraphPoint::vertex(0);
  return point_from_json(g, load_json_file(o.base));
}

// Covers and bundles may embed their base graph; a second input must carry a
// value-equal graph and is rebuilt on the first one's, so indices agree.
CoverPtr cover_on(Json j, const GraphPtr& base) {
  if (base != nullptr && j.is_object() && j.contains("graph")) {
    require(same_graph(base, graph_from_json(j.at("graph"))),
            "inputs must share the base graph");
    j.erase("graph");
  }
  return cover_from_json(j, base);
}

Multidivisor bundle_on(Json j, const GraphPtr& base) {
  require(j.is_object(), "bundle must be a JSON object");
  if (j.contains("divisor")) {
    if (base != nullptr && j.contains("cover") && j.at("cover").is_object() &&
        j.at("cover").contains("graph")) {
      require(same_graph(base, graph_from_json(j.at("cover").at("graph"))),
              "inputs must share the base graph");
      j.at("cover").erase("graph");
    }
    return multidivisor_from_json(j, base);
  }
  if (base != nullptr && j.contains("graph")) {
    require(same_graph(base, graph_from_json(j.at("graph"))),
            "inputs must share the base graph");
    j.erase("graph");
  }
  return multidivisor_of(cocycle_from_json(j, base));
}

GraphPtr optional_graph(const Opts& o) {
  return o.graph.empty() ? nullptr : graph_from_json(load_json_file(o.graph));
}

Multidivisor need_bundle(const Opts& o) {
  require(!o.bundle.empty(), "missing --bundle");
  return bundle_on(load_json_file(o.bundle), optional_graph(o));
}

Multidivisor second_bundle(const Opts& o, const Multidivisor& first) {
  require(!o.bundle2.empty(), "missing --bundle2");
  return bundle_on(load_json_file(o.bundle2), first.cover->base());
}

RootDatum need_datum(const Opts& o) {
  require(!o.datum.empty(), "missing --datum");
  return root_datum_from_json(load_json_file(o.datum));
}

Rat circle_circumference(const Opts& o) {
  if (o.graph.empty()) return rat(1);
  GraphPtr g = need_graph(o);
  require(same_graph(g, circle_graph(g->total_length())),
          "graph must be the standard circle");
  return g->total_length();
}

Json multidivisor_out(const Multidivisor& md) { return multidivisor_to_json(md); }

// ---------------------------------------------------------------------------

Json cmd_graph_info(const Opts& o) {
  GraphPtr g = need_graph(o);
  Json genus = Json::array();
  for (int gi : g->genus_per_component()) genus.push_back(gi);
  return Json{{"vertices", g->vertex_count()},
              {"edges", g->edge_count()},
              {"components", g->component_count()},
              {"euler", g->euler_characteristic()},
              {"genus", genus},
              {"total_length", rat_str(g->total_length())}};
}

Json cmd_divisor_degree(const Opts& o) {
  GraphPtr g = need_graph(o);
  return Json{{"degree", need_divisor(g, o.divisor, "divisor").degree()}};
}

Json cmd_divisor_reduce(const Opts& o) {
  GraphPtr g = need_graph(o);
  RankContext ctx(effective_limit(o, kDefaultVertexLimit));
  return divisor_to_json(
      ctx.reduce(need_divisor(g, o.divisor, "divisor"), base_point(g, o)));
}

Json cmd_divisor_rank(const Opts& o) {
  GraphPtr g = need_graph(o);
  RankContext ctx(effective_limit(o, kDefaultVertexLimit));
  return Json{{"rank", ctx.rank(need_divisor(g, o.divisor, "divisor"))}};
}

Json cmd_divisor_equiv(const Opts& o) {
  GraphPtr g = need_graph(o);
  RankContext ctx(effective_limit(o, kDefaultVertexLimit));
  bool eq = ctx.linequiv(need_divisor(g, o.divisor, "divisor"),
                         need_divisor(g, o.divisor2, "divisor2"));
  return Json{{"equivalent", eq}};
}

Json cmd_divisor_jacobian(const Opts& o) {
  GraphPtr g = need_graph(o);
  JacobianData jac(SimpleModel::refine(g));
  std::vector<Rat> v =
      jac.abel_jacobi(need_divisor(g, o.divisor, "divisor"), base_point(g, o));
  Json vec = Json::array();
  for (const Rat& x : v) vec.push_back(rat_str(x));
  return Json{{"genus", jac.genus()},
              {"vector", vec},
              {"lattice", jac.is_lattice(v)}};
}

Json cmd_divisor_rr_check(const Opts& o) {
  GraphPtr g = need_graph(o);
  RankContext ctx(effective_limit(o, kDefaultVertexLimit));
  RRCheckResult rr = ctx.rr_check(need_divisor(g, o.divisor, "divisor"));
  return Json{{"lhs", rr.rank_d - rr.rank_residual},
              {"rhs", rr.degree + rr.euler},
              {"holds", rr.holds}};
}

Json cmd_cover_build(const Opts& o) {
  require(!o.cover.empty(), "missing --cover");
  CoverPtr cov = cover_on(load_json_file(o.cover), optional_graph(o));
  return Json{{"cover", cover_to_json(*cov, true)},
              {"total", graph_to_json(cov->total())}};
}

Json cmd_cover_enumerate(const Opts& o) {
  GraphPtr g = need_graph(o);
  require(o.degree >= 1, "--degree must be at least 1");
  Json covers = Json::array();
  for (const CoverPtr& c : enumerate_covers(g, static_cast<int>(o.degree)))
    covers.push_back(cover_to_json(*c, false));
  return Json{{"count", covers.size()}, {"covers", covers}};
}

Json cmd_cover_components(const Opts& o) {
  require(!o.cover.empty(), "missing --cover");
  CoverPtr cov = cover_on(load_json_file(o.cover), optional_graph(o));
  const GraphPtr& total = cov->total();
  std::vector<long> sheets(static_cast<size_t>(total->component_count()), 0);
  for (int k = 0; k < cov->degree(); ++k)
    ++sheets[static_cast<size_t>(total->component_of(cov->vertex_lift(0, k)))];
  Json per = Json::array();
  for (long s : sheets) per.push_back(s);
  return Json{{"components", total->component_count()}, {"sheets", per}};
}

Json cmd_cover_deck(const Opts& o) {
  require(!o.cover.empty(), "missing --cover");
  CoverPtr cov = cover_on(load_json_file(o.cover), optional_graph(o));
  Json elements = Json::array();
  for (const CoverIso& iso : deck_group(*cov)) {
    Json p = Json::array();
    for (int img : iso.vperm.at(0)) p.push_back(img + 1);
    elements.push_back(p);
  }
  return Json{{"order", elements.size()}, {"elements", elements}};
}

Json cmd_cover_product(const Opts& o) {
  require(!o.cover.empty(), "missing --cover");
  require(!o.cover2.empty(), "missing --cover2");
  CoverPtr a = cover_on(load_json_file(o.cover), optional_graph(o));
  CoverPtr b = cover_on(load_json_file(o.cover2), a->base());
  CoverPtr prod = fibered_product(*a, *b);
  return Json{{"cover", cover_to_json(*prod, true)},
              {"total", graph_to_json(prod->total())}};
}

Json cmd_bundle_convert(const Opts& o) {
  require(!o.bundle.empty(), "missing --bundle");
  Json j = load_json_file(o.bundle);
  require(j.is_object(), "bundle must be a JSON object");
  if (j.contains("divisor"))
    return cocycle_to_json(cocycle_of(multidivisor_from_json(j, optional_graph(o))));
  return multidivisor_to_json(
      multidivisor_of(cocycle_from_json(j, optional_graph(o))));
}

Json cmd_bundle_sum(const Opts& o) {
  Multidivisor a = need_bundle(o);
  return multidivisor_out(direct_sum(a, second_bundle(o, a)));
}

Json cmd_bundle_tensor(const Opts& o) {
  Multidivisor a = need_bundle(o);
  return multidivisor_out(tensor(a, second_bundle(o, a)));
}

Json cmd_bundle_dual(const Opts& o) { return multidivisor_out(dual(need_bundle(o))); }

Json cmd_bundle_det(const Opts& o) {
  return multidivisor_out(determinant(need_bundle(o)));
}

Json cmd_bundle_degree(const Opts& o) {
  return Json{{"degree", bundle_degree(need_bundle(o))}};
}

Json cmd_bundle_rank(const Opts& o) {
  int r = bn_rank_bundle(need_bundle(o), effective_limit(o, kDefaultVertexLimit));
  return Json{{"rank", r}};
}

Json cmd_bundle_iso(const Opts& o) {
  Multidivisor a = need_bundle(o);
  Multidivisor b = second_bundle(o, a);
  return Json{
      {"isomorphic", bundle_iso(a, b, effective_limit(o, kDefaultVertexLimit))}};
}

Json cmd_bundle_stability(const Opts& o) {
  StabilityResult st = stability(need_bundle(o));
  Json slopes = Json::array();
  for (const Rat& s : st.component_slopes) slopes.push_back(rat_str(s));
  return Json{{"stable", st.stable},
              {"semistable", st.semistable},
              {"slope", rat_str(st.slope)},
              {"component_slopes", slopes}};
}

Json cmd_bundle_wrr_check(const Opts& o) {
  WRRResult w = wrr_check(need_bundle(o), effective_limit(o, kDefaultVertexLimit));
  return Json{{"lhs", w.rank_e - w.rank_twisted},
              {"rhs", w.degree + w.n * w.euler},
              {"holds", w.holds}};
}

Json cmd_bundle_from_localsys(const Opts& o) {
  GraphPtr g = need_graph(o);
  require(!o.bundle.empty(), "missing --bundle");
  LocalSystemRep rep = local_system_from_json(load_json_file(o.bundle));
  return multidivisor_out(from_local_system(g, rep));
}

Json cmd_bundle_to_localsys(const Opts& o) {
  return local_system_to_json(to_local_system(need_bundle(o)));
}

Json cmd_elliptic_etrop(const Opts& o) {
  require(o.rank >= 1, "--rank must be at least 1");
  return multidivisor_out(e_trop(o.rank, o.degree, circle_circumference(o)));
}

Json cmd_elliptic_psi(const Opts& o) {
  require(o.rank >= 1, "--rank must be at least 1");
  Rat ell = circle_circumference(o);
  Rat x = o.base.empty() ? rat(0) : parse_rat(o.base);
  return multidivisor_out(psi(CirclePoint(ell, x), o.rank, o.degree));
}

Json cmd_elliptic_classify(const Opts& o) {
  return canonical_form_to_json(classify_semistable(need_bundle(o)));
}

Json cmd_elliptic_bn_member(const Opts& o) {
  return Json{{"member", brill_noether_member(need_bundle(o), o.rank)}};
}

Json cmd_elliptic_theta_member(const Opts& o) {
  Multidivisor e = need_bundle(o);
  return Json{{"member", theta_member(e, second_bundle(o, e))}};
}

Json cmd_rootdatum_validate(const Opts& o) {
  RootDatumReport rep = validate(need_datum(o));
  return Json{{"axiom_i", rep.axiom_i}, {"axiom_ii", rep.axiom_ii}, {"ok", rep.ok}};
}

Json cmd_rootdatum_weyl(const Opts& o) {
  std::vector<IntMatrix> w =
      weyl_group(need_datum(o), effective_limit(o, kWeylBound));
  Json elements = Json::array();
  for (const IntMatrix& m : w) {
    Json rows = Json::array();
    for (const IntVec& row : m) rows.push_back(row);
    elements.push_back(rows);
  }
  return Json{{"order", w.size()}, {"elements", elements}};
}

Json cmd_suite_run(bool& all_pass) {
  Json criteria = Json::array();
  all_pass = true;
  for (const CriterionResult& r : run_acceptance_suite()) {
    all_pass = all_pass && r.pass;
    criteria.push_back(Json{{"index", r.index},
                            {"name", r.name},
                            {"pass", r.pass},
                            {"instances", r.instances},
                            {"detail", r.detail}});
  }
  return Json{{"all_pass", all_pass}, {"criteria", criteria}};
}

void add_io_flags(CLI::App* cmd, Opts& o) {
  cmd->add_option("--graph", o.graph, "graph JSON file");
  cmd->add_option("--divisor", o.divisor, "divisor JSON file");
  cmd->add_option("--divisor2", o.divisor2, "second divisor JSON file");
  cmd->add_option("--cover", o.cover, "cover JSON file");
  cmd->add_option("--cover2", o.cover2, "second cover JSON file");
  cmd->add_option("--bundle", o.bundle, "bundle JSON file");
  cmd->add_option("--bundle2", o.bundle2, "second bundle JSON file");
  cmd->add_option("--datum", o.datum, "root datum JSON file");
  cmd->add_option("--base", o.base,
                  "base point file (divisor verbs) or coordinate (elliptic)");
  cmd->add_option("--degree", o.degree, "degree parameter");
  cmd->add_option("--rank", o.rank, "rank parameter");
  cmd->add_option("--limit", o.limit, "size limit override");
}

}  // namespace

}  // namespace tropbun

int main(int argc, char** argv) {
  using namespace tropbun;

  Opts opts;
  bool pretty = false;
  bool have_result = false;
  bool suite_ok = true;
  Json result;

  CLI::App app{"exact divisor theory and tropical vector bundles on metric graphs"};
  app.require_subcommand(1);
  app.add_flag("--pretty", pretty, "indent the JSON output");

  const std::pair<std::pair<const char*, const char*>, Json (*)(const Opts&)>
      table[] = {
          {{"graph", "info"}, cmd_graph_info},
          {{"divisor", "degree"}, cmd_divisor_degree},
          {{"divisor", "reduce"}, cmd_divisor_reduce},
          {{"divisor", "rank"}, cmd_divisor_rank},
          {{"divisor", "equiv"}, cmd_divisor_equiv},
          {{"divisor", "jacobian"}, cmd_divisor_jacobian},
          {{"divisor", "rr-check"}, cmd_divisor_rr_check},
          {{"cover", "build"}, cmd_cover_build},
          {{"cover", "enumerate"}, cmd_cover_enumerate},
          {{"cover", "components"}, cmd_cover_components},
          {{"cover", "deck"}, cmd_cover_deck},
          {{"cover", "product"}, cmd_cover_product},
          {{"bundle", "convert"}, cmd_bundle_convert},
          {{"bundle", "sum"}, cmd_bundle_sum},
          {{"bundle", "tensor"}, cmd_bundle_tensor},
          {{"bundle", "dual"}, cmd_bundle_dual},
          {{"bundle", "det"}, cmd_bundle_det},
          {{"bundle", "degree"}, cmd_bundle_degree},
          {{"bundle", "rank"}, cmd_bundle_rank},
          {{"bundle", "iso"}, cmd_bundle_iso},
          {{"bundle", "stability"}, cmd_bundle_stability},
          {{"bundle", "wrr-check"}, cmd_bundle_wrr_check},
          {{"bundle", "from-localsys"}, cmd_bundle_from_localsys},
          {{"bundle", "to-localsys"}, cmd_bundle_to_localsys},
          {{"elliptic", "etrop"}, cmd_elliptic_etrop},
          {{"elliptic", "psi"}, cmd_elliptic_psi},
          {{"elliptic", "classify"}, cmd_elliptic_classify},
          {{"elliptic", "bn-member"}, cmd_elliptic_bn_member},
          {{"elliptic", "theta-member"}, cmd_elliptic_theta_member},
          {{"rootdatum", "validate"}, cmd_rootdatum_validate},
          {{"rootdatum", "weyl"}, cmd_rootdatum_weyl},
      };

  std::map<std::string, CLI::App*> groups;
  for (const auto& [names, fn] : table) {
    auto it = groups.find(names.first);
    if (it == groups.end()) {
      CLI::App* g = app.add_subcommand(names.first);
      g->require_subcommand(1);
      g->fallthrough();
      it = groups.emplace(names.first, g).first;
    }
    CLI::App* leaf = it->second->add_subcommand(names.second);
    leaf->fallthrough();
    add_io_flags(leaf, opts);
    Json (*handler)(const Opts&) = fn;
    leaf->callback([&, handler] {
      result = handler(opts);
      have_result = true;
    });
  }

  CLI::App* suite = app.add_subcommand("suite");
  suite->require_subcommand(1);
  suite->fallthrough();
  CLI::App* suite_run = suite->add_subcommand("run", "run the acceptance suite");
  suite_run->fallthrough();
  suite_run->callback([&] {
    result = cmd_suite_run(suite_ok);
    have_result = true;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const size_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }

  if (have_result) std::cout << (pretty ? result.dump(2) : result.dump()) << "\n";
  return suite_ok ? 0 : 1;
}
