#pragma once

#include <optional>
#include <vector>

#include "tropbun/metric_graph.hpp"

namespace tropbun {

// Default cap on subdivision vertices; overridable per call and, in the CLI,
// through the TROPBUN_LIMIT environment variable.
inline constexpr long kDefaultVertexLimit = 5000;

// Rescaled model with every edge length exactly 1. Positions are multiplied
// by `scale`; chi and componentwise genus are untouched. Every loop receives
// a midpoint so the result never has self-edges (parallel edges are fine for
// chip firing, self-edges would break vertex-support sufficiency).
struct UnitSubdivision {
  GraphPtr original;
  GraphPtr graph;
  mpz_class scale;
  // Per subdivision vertex, the original point it sits at.
  std::vector<GraphPoint> vertex_origin;
  // Per original edge, subdivision vertices at scaled positions 0..len*scale.
  std::vector<std::vector<int>> positions;

  // Subdivision vertex for an original point, if it lands on one.
  std::optional<int> locate(const GraphPoint& p) const;
  int vertex_for(const GraphPoint& p) const;  // throws internal_error if absent

  std::vector<Int> divisor_vector(const Divisor& d) const;
  Divisor to_divisor(const std::vector<Int>& vec) const;
};

// `extra` lists points that must land on subdivision vertices (interior
// points only matter; vertices are free). Throws size_limit_error when the
// result would exceed `vertex_limit` vertices.
UnitSubdivision subdivide_to_unit(const GraphPtr& g,
                                  const std::vector<GraphPoint>& extra,
                                  long vertex_limit = kDefaultVertexLimit);

}  // namespace tropbun
