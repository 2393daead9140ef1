#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "tropbun/metric_graph.hpp"

namespace tropbun {

class SimpleModel;
using ModelPtr = std::shared_ptr<const SimpleModel>;

// A loop-free refinement of a metric graph together with a deterministic
// spanning forest and the induced fundamental cycle basis. Each loop gets one
// midpoint; each member of a parallel class of three or more edges gets one
// midpoint; parallel pairs stay (nothing downstream needs to separate them,
// and the minimal circle model must survive unchanged so its edges stay
// addressable).
class SimpleModel {
 public:
  // Refine `g`. Inserted vertices get ids derived from the split edge.
  static ModelPtr refine(GraphPtr g);

  // Wrap a graph that is already loop-free as its own model (identity point
  // maps). `edge_priority`, when given, orders Kruskal's scan for the
  // spanning forest; ties and the default follow edge index order.
  static ModelPtr wrap(GraphPtr g,
                       const std::vector<int>& edge_priority = {});

  const GraphPtr& original() const { return original_; }
  const GraphPtr& graph() const { return graph_; }

  GraphPoint to_model(const GraphPoint& p) const;
  GraphPoint to_original(const GraphPoint& p) const;
  Divisor divisor_to_model(const Divisor& d) const;
  Divisor divisor_to_original(const Divisor& d) const;

  bool in_forest(int e) const { return in_forest_.at(e) != 0; }
  const std::vector<int>& nontree_edges() const { return nontree_edges_; }
  int genus() const { return static_cast<int>(cycles_.size()); }

  // Fundamental cycle j: non-tree edge e_j with coefficient +1, closed up
  // through the forest. coeff lists (edge, +-1), sparse, sorted by edge.
  struct Cycle {
    int nontree_edge;
    std::vector<std::pair<int, int>> coeff;
  };
  const std::vector<Cycle>& cycles() const { return cycles_; }
  // Signed coefficient of cycle j on edge e (0 when the cycle avoids e).
  int cycle_coeff(int j, int e) const;

  // Rooted forest: parent_edge[v] is the forest edge towards the root
  // (-1 at roots), parent_vertex[v] the neighbor through it. Roots are the
  // lowest vertex of each component.
  int parent_vertex(int v) const { return parent_vertex_.at(v); }
  int parent_edge(int v) const { return parent_edge_.at(v); }
  int root_of_component(int c) const { return component_root_.at(c); }

 private:
  static ModelPtr finish(GraphPtr original, GraphPtr refined,
                         std::vector<std::vector<std::pair<int, Rat>>> pieces,
                         std::vector<int> edge_priority);

  GraphPtr original_, graph_;
  // Per original edge: its model pieces as (model edge, start offset in the
  // original edge), ordered along the edge. Identity refinements share ids.
  std::vector<std::vector<std::pair<int, Rat>>> pieces_;
  // Per model edge: (original edge, offset of model-edge src in it).
  std::vector<std::pair<int, Rat>> piece_origin_;
  // Per model vertex: the point of the original graph it sits at.
  std::vector<GraphPoint> vertex_origin_;

  std::vector<char> in_forest_;
  std::vector<int> nontree_edges_;
  std::vector<Cycle> cycles_;
  std::vector<int> parent_vertex_, parent_edge_, component_root_;
};

}  // namespace tropbun
