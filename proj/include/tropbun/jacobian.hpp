#pragma once

#include <vector>

#include "tropbun/metric_graph.hpp"
#include "tropbun/simple_model.hpp"

namespace tropbun {

// Jacobian data attached to a simple model: cycle pairing matrix, the
// Abel-Jacobi map in cycle coordinates (values in Q^g, classes modulo the
// lattice spanned by the Gram columns), and a section of its inverse.
class JacobianData {
 public:
  explicit JacobianData(ModelPtr model);

  const ModelPtr& model() const { return model_; }
  int genus() const { return static_cast<int>(gram_.size()); }
  const std::vector<std::vector<Rat>>& gram() const { return gram_; }

  // Pairing of each basis cycle with the tree path from the component root
  // to p (p a point of the model graph), plus the partial edge segment.
  std::vector<Rat> path_pairing(const GraphPoint& model_point) const;

  // d on the original graph; requires degree zero on every component. The
  // base only fixes a path convention and does not affect the value.
  std::vector<Rat> abel_jacobi(const Divisor& d, const GraphPoint& base) const;

  // Exact solve of gram * x = v; empty optional when genus is 0 and v != 0.
  std::vector<Rat> solve_gram(const std::vector<Rat>& v) const;
  bool is_lattice(const std::vector<Rat>& v) const;
  bool classes_equal(const std::vector<Rat>& a, const std::vector<Rat>& b) const;

  // A degree-`degree` divisor on the original graph whose Abel-Jacobi class
  // relative to `base` is v.
  Divisor divisor_from_jac(const std::vector<Rat>& v, Int degree,
                           const GraphPoint& base) const;

 private:
  ModelPtr model_;
  std::vector<std::vector<Rat>> gram_;
  // Per model edge, the cycles through it: (cycle index, coefficient).
  std::vector<std::vector<std::pair<int, int>>> edge_cycles_;
};

}  // namespace tropbun
