#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tropbun/errors.hpp"
#include "tropbun/rational.hpp"

namespace tropbun {

class MetricGraph;
using GraphPtr = std::shared_ptr<const MetricGraph>;

struct EdgeSpec {
  std::string id, src, dst;
  Rat length;
};

// A finite model of a compact metric graph: vertices with opaque string ids,
// edges with a fixed src->dst orientation and a positive rational length.
// Vertices and edges are stored sorted by id; all indices below refer to that
// order. Loops and parallel edges are allowed at this level.
class MetricGraph {
 public:
  struct Edge {
    std::string id;
    int src, dst;
    Rat length;
  };

  static GraphPtr build(std::vector<std::string> vertices,
                        std::vector<EdgeSpec> edges);

  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& vertex_id(int v) const { return vertex_ids_.at(v); }
  const Edge& edge(int e) const { return edges_.at(e); }

  int vertex_index(const std::string& id) const;
  int edge_index(const std::string& id) const;
  bool has_vertex(const std::string& id) const {
    return vertex_lookup_.count(id) > 0;
  }
  bool has_edge(const std::string& id) const {
    return edge_lookup_.count(id) > 0;
  }

  // Incident half-edges as (edge index, end) with end 0 = src, 1 = dst;
  // a loop contributes both ends. Sorted by (edge index, end).
  const std::vector<std::pair<int, int>>& incident(int v) const {
    return incident_.at(v);
  }
  int valence(int v) const { return static_cast<int>(incident_.at(v).size()); }

  Rat total_length() const;

  int component_count() const { return component_count_; }
  int component_of(int v) const { return component_.at(v); }
  // chi = #V - #E, the whole graph.
  int euler_characteristic() const;
  // First Betti number 1 - chi_c of each component, in component order
  // (components numbered by their lowest vertex index).
  std::vector<int> genus_per_component() const;

  bool is_loop(int e) const {
    return edges_.at(e).src == edges_.at(e).dst;
  }

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, int> vertex_lookup_, edge_lookup_;
  std::vector<std::vector<std::pair<int, int>>> incident_;
  std::vector<int> component_;
  int component_count_ = 0;
};

// True when the two handles denote the same graph, by identity or by value.
bool same_graph(const GraphPtr& a, const GraphPtr& b);

// A rational point: either a vertex or an interior point of an edge at
// offset strictly between 0 and the edge length, measured from src.
// Construction normalizes offset 0 / length to the corresponding vertex.
struct GraphPoint {
  bool at_vertex = true;
  int index = 0;  // vertex index, or edge index for interior points
  Rat offset;     // 0 for vertices

  static GraphPoint vertex(int v) { return GraphPoint{true, v, Rat(0)}; }
  static GraphPoint on_edge(const MetricGraph& g, int e, const Rat& offset);
  static GraphPoint on_edge(const GraphPtr& g, int e, const Rat& offset) {
    return on_edge(*g, e, offset);
  }

  bool operator==(const GraphPoint& o) const {
    return at_vertex == o.at_vertex && index == o.index && offset == o.offset;
  }
  bool operator<(const GraphPoint& o) const {
    if (at_vertex != o.at_vertex) return at_vertex && !o.at_vertex;
    if (index != o.index) return index < o.index;
    return offset < o.offset;
  }
};

std::string point_str(const MetricGraph& g, const GraphPoint& p);

// Divisor with rational-point support and integer coefficients.
class Divisor {
 public:
  Divisor() = default;
  explicit Divisor(GraphPtr host) : host_(std::move(host)) {}

  const GraphPtr& host() const { return host_; }
  const std::map<GraphPoint, Int>& coeffs() const { return coeffs_; }

  void add(const GraphPoint& p, Int c);
  Int coeff(const GraphPoint& p) const;
  Int degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_effective() const;
  int support_size() const { return static_cast<int>(coeffs_.size()); }

  Divisor operator+(const Divisor& o) const;
  Divisor operator-(const Divisor& o) const;
  Divisor operator-() const;
  Divisor operator*(Int k) const;

  // Degree of the part living on one component of the host.
  Int degree_on_component(int comp) const;

 private:
  GraphPtr host_;
  std::map<GraphPoint, Int> coeffs_;
};

int component_of_point(const MetricGraph& g, const GraphPoint& p);

// Canonical divisor: sum over vertices of (valence - 2) * v.
Divisor canonical_divisor(const GraphPtr& g);

}  // namespace tropbun
