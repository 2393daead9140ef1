#pragma once

#include "tropbun/metric_graph.hpp"

namespace tropbun {

// Segment: vertices a, b joined by edge s of length 1.
GraphPtr segment_graph();

// Circle of the given circumference as two parallel edges e1, e2 between u
// and v, each of length circumference/2. The circle coordinate x in
// [0, circumference) starts at u and runs along e2 first.
GraphPtr circle_graph(const Rat& circumference);

// Theta graph: three parallel edges e1, e2, e3 of length 1 between u and v.
GraphPtr theta_graph();

// Dumbbell: loops l1 at a and l2 at b of length 1 each, bridge br from a to b.
GraphPtr dumbbell_graph();

// Point at circle coordinate x (taken modulo the circumference).
GraphPoint circle_point(const GraphPtr& circle, const Rat& x);

// Inverse of circle_point for points of a circle graph.
Rat circle_coordinate(const GraphPtr& circle, const GraphPoint& p);

}  // namespace tropbun
