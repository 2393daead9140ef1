#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tropbun/chip_firing.hpp"
#include "tropbun/metric_graph.hpp"
#include "tropbun/subdivision.hpp"

namespace tropbun {

struct RRCheckResult {
  int rank_d;
  int rank_residual;
  Int degree;
  Int euler;
  bool holds;
};

// Shared context: caches unit subdivisions and their chip engines (including
// rank memo tables) keyed by host graph and the interior points that must be
// subdivision vertices. Reusing one context across many queries on the same
// graph is considerably faster than fresh calls.
class RankContext {
 public:
  explicit RankContext(long vertex_limit = kDefaultVertexLimit)
      : vertex_limit_(vertex_limit) {}

  long vertex_limit() const { return vertex_limit_; }

  // q-reduced representative of the class of d. Requires a connected host.
  Divisor reduce(const Divisor& d, const GraphPoint& base);
  bool linequiv(const Divisor& a, const Divisor& b);
  int rank(const Divisor& d);
  RRCheckResult rr_check(const Divisor& d);  // connected host

 private:
  struct Prepared {
    UnitSubdivision sub;
    int ncomp = 1;
    std::vector<int> comp_of;      // subdivision vertex -> component
    std::vector<int> local_index;  // subdivision vertex -> index in component
    std::vector<std::vector<int>> comp_vertices;
    std::vector<std::unique_ptr<ChipEngine>> engines;
  };

  Prepared& prepare(const GraphPtr& host, const std::vector<GraphPoint>& interior);

  long vertex_limit_;
  std::map<std::string, std::shared_ptr<Prepared>> cache_;
};

Divisor reduce_divisor(const Divisor& d, const GraphPoint& base,
                       long vertex_limit = kDefaultVertexLimit);
bool linearly_equivalent(const Divisor& a, const Divisor& b,
                         long vertex_limit = kDefaultVertexLimit);
int divisor_rank(const Divisor& d, long vertex_limit = kDefaultVertexLimit);
RRCheckResult riemann_roch_check(const Divisor& d,
                                 long vertex_limit = kDefaultVertexLimit);

}  // namespace tropbun
