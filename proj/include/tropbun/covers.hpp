#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tropbun/metric_graph.hpp"
#include "tropbun/simple_model.hpp"

namespace tropbun {

// Permutation of {0..n-1}: p[i] is the image of i. Wire format is 1-based.
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm compose(const Perm& a, const Perm& b);  // (a * b)(i) = a[b[i]]
Perm inverse_perm(const Perm& p);
bool is_perm(const Perm& p);

class FreeCover;
using CoverPtr = std::shared_ptr<const FreeCover>;

// A degree-n free cover of a metric graph, presented by a permutation per
// edge of the simple model of the base: the lift of edge e starting in sheet
// k ends in sheet sigma_e(k). The total space is materialized as a metric
// graph with vertices "v@k" and edges "e@k" (k the 1-based sheet of the src
// endpoint), carrying the pulled-back lengths.
class FreeCover {
 public:
  // sigma is keyed by base model edge id; absent edges get the identity.
  static CoverPtr build(const GraphPtr& base, int degree,
                        const std::map<std::string, Perm>& sigma);
  static CoverPtr trivial(const GraphPtr& base, int degree);

  const GraphPtr& base() const { return base_; }
  const ModelPtr& base_model() const { return base_model_; }
  int degree() const { return degree_; }
  const Perm& sigma(int model_edge) const { return sigma_.at(model_edge); }

  const GraphPtr& total() const { return total_; }
  // Model of the total space; its spanning forest contains every lift of a
  // base forest edge.
  const ModelPtr& total_model() const { return total_model_; }

  int vertex_lift(int base_model_vertex, int sheet) const;
  int edge_lift(int base_model_edge, int sheet) const;
  std::pair<int, int> vertex_down(int total_vertex) const;  // (base vertex, sheet)
  std::pair<int, int> edge_down(int total_edge) const;      // (base edge, src sheet)

  // Point of the total graph over a base model point, in the given sheet
  // (the src sheet of the edge lift for interior points).
  GraphPoint lift_point(const GraphPoint& base_model_point, int sheet) const;
  // Projection to the base model graph.
  GraphPoint project_point(const GraphPoint& total_point) const;

  // Pullback of a divisor on the base (original coordinates) to the total
  // space; pushforward of a divisor on the total space to the base.
  Divisor pullback(const Divisor& on_base) const;
  Divisor pushforward(const Divisor& on_total) const;

  bool is_connected() const { return total_->component_count() == 1; }

 private:
  GraphPtr base_;
  ModelPtr base_model_;
  int degree_ = 1;
  std::vector<Perm> sigma_;  // per base model edge
  GraphPtr total_;
  ModelPtr total_model_;
  std::vector<std::vector<int>> vlift_, elift_;
  std::vector<std::pair<int, int>> vdown_, edown_;
};

// Fiber bijections over every base model vertex intertwining the two covers.
struct CoverIso {
  std::vector<Perm> vperm;  // per base model vertex
};

// All isomorphisms over the identity of the base; empty when the covers are
// not isomorphic. Bases must agree as graphs and degrees must match.
std::vector<CoverIso> cover_isomorphisms(const FreeCover& a, const FreeCover& b);

// Deck transformations: isomorphisms of the cover with itself.
std::vector<CoverIso> deck_group(const FreeCover& c);

// All degree-n covers up to cover isomorphism, as the lexicographically
// minimal representative of each class: identity on forest edges, and the
// tuple of non-tree permutations minimal under simultaneous conjugation.
// Requires a connected base. Throws size_limit_error when n!^(g+1) would be
// unreasonably large.
std::vector<CoverPtr> enumerate_covers(const GraphPtr& base, int degree);

CoverPtr disjoint_union(const FreeCover& a, const FreeCover& b);
CoverPtr fibered_product(const FreeCover& a, const FreeCover& b);

// Sheet index of the fibered product: (k, l) -> k * deg(b) + l.
int product_sheet(const FreeCover& a, const FreeCover& b, int k, int l);

}  // namespace tropbun
