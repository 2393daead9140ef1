#pragma once

#include <json.hpp>

#include <string>

#include "tropbun/bundles.hpp"
#include "tropbun/covers.hpp"
#include "tropbun/elliptic.hpp"
#include "tropbun/metric_graph.hpp"
#include "tropbun/root_datum.hpp"

namespace tropbun {

using Json = nlohmann::json;

// Every reader validates shape and values and throws invalid_input on any
// defect; writers emit the exact wire forms the readers accept. Rationals
// travel as "p/q" strings, permutations in one-line image notation with
// 1-based sheets, identity entries omitted.

Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);

Json graph_to_json(const GraphPtr& g);
GraphPtr graph_from_json(const Json& j);

// Points addressed by ids of `host` itself.
Json point_to_json(const GraphPtr& host, const GraphPoint& p);
GraphPoint point_from_json(const GraphPtr& host, const Json& j);

Json divisor_to_json(const Divisor& d);
Divisor divisor_from_json(const GraphPtr& host, const Json& j);

// Points of a cover total, addressed by base model ids plus "sheet".
Json cover_point_to_json(const FreeCover& cov, const GraphPoint& p);
GraphPoint cover_point_from_json(const FreeCover& cov, const Json& j);

Json cover_divisor_to_json(const FreeCover& cov, const Divisor& d);
Divisor cover_divisor_from_json(const CoverPtr& cov, const Json& j);

// With embed_graph the base graph travels inside the cover object; the
// reader uses an embedded graph when present, otherwise `base` must be
// given.
Json cover_to_json(const FreeCover& cov, bool embed_graph = true);
CoverPtr cover_from_json(const Json& j, const GraphPtr& base = nullptr);

Json multidivisor_to_json(const Multidivisor& md);
Multidivisor multidivisor_from_json(const Json& j, const GraphPtr& base = nullptr);

Json cocycle_to_json(const BundleCocycle& cc);
BundleCocycle cocycle_from_json(const Json& j, const GraphPtr& base = nullptr);

Json local_system_to_json(const LocalSystemRep& rep);
LocalSystemRep local_system_from_json(const Json& j);

Json canonical_form_to_json(const SemistableCanonicalForm& form);

Json root_datum_to_json(const RootDatum& rd);
RootDatum root_datum_from_json(const Json& j);

}  // namespace tropbun
