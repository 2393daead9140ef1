#include "tropbun/standard_graphs.hpp"

#include "tropbun/errors.hpp"

namespace tropbun {

GraphPtr segment_graph() {
  return MetricGraph::build({"a", "b"}, {{"s", "a", "b", rat(1)}});
}

GraphPtr circle_graph(const Rat& circumference) {
  require(circumference > 0, "circumference must be positive");
  const Rat half = circumference / 2;
  return MetricGraph::build({"u", "v"},
                            {{"e1", "u", "v", half}, {"e2", "u", "v", half}});
}

GraphPtr theta_graph() {
  return MetricGraph::build({"u", "v"}, {{"e1", "u", "v", rat(1)},
                                         {"e2", "u", "v", rat(1)},
                                         {"e3", "u", "v", rat(1)}});
}

GraphPtr dumbbell_graph() {
  return MetricGraph::build({"a", "b"}, {{"br", "a", "b", rat(1)},
                                         {"l1", "a", "a", rat(1)},
                                         {"l2", "b", "b", rat(1)}});
}

GraphPoint circle_point(const GraphPtr& circle, const Rat& x) {
  check_internal(circle->vertex_count() == 2 && circle->edge_count() == 2,
                 "not a standard circle graph");
  const Rat len = circle->total_length();
  const Rat half = len / 2;
  const Rat t = rat_mod(x, len);
  const int e1 = circle->edge_index("e1");
  const int e2 = circle->edge_index("e2");
  if (t <= half) return GraphPoint::on_edge(circle, e2, t);
  return GraphPoint::on_edge(circle, e1, len - t);
}

Rat circle_coordinate(const GraphPtr& circle, const GraphPoint& p) {
  check_internal(circle->vertex_count() == 2 && circle->edge_count() == 2,
                 "not a standard circle graph");
  const Rat len = circle->total_length();
  if (p.at_vertex)
    return circle->vertex_id(p.index) == "u" ? rat(0) : len / 2;
  if (circle->edge(p.index).id == "e2") return p.offset;
  return len - p.offset;
}

}  // namespace tropbun
