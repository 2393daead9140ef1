#include "tropbun/jacobian.hpp"

#include <algorithm>

#include "tropbun/errors.hpp"

namespace tropbun {

JacobianData::JacobianData(ModelPtr model) : model_(std::move(model)) {
  const auto& g = model_->graph();
  const auto& cycles = model_->cycles();
  const int genus = static_cast<int>(cycles.size());
  edge_cycles_.resize(static_cast<size_t>(g->edge_count()));
  for (int j = 0; j < genus; ++j) {
    for (const auto& [e, c] : cycles[static_cast<size_t>(j)].coeff)
      edge_cycles_[static_cast<size_t>(e)].emplace_back(j, c);
  }
  gram_.assign(static_cast<size_t>(genus), std::vector<Rat>(static_cast<size_t>(genus), rat(0)));
  for (int e = 0; e < g->edge_count(); ++e) {
    const auto& through = edge_cycles_[static_cast<size_t>(e)];
    const Rat len = g->edge(e).length;
    for (const auto& [i, ci] : through)
      for (const auto& [j, cj] : through)
        gram_[static_cast<size_t>(i)][static_cast<size_t>(j)] += len * Rat(ci * cj);
  }
}

std::vector<Rat> JacobianData::path_pairing(const GraphPoint& p) const {
  const auto& g = model_->graph();
  std::vector<Rat> acc(static_cast<size_t>(genus()), rat(0));
  int v;
  if (p.at_vertex) {
    v = p.index;
  } else {
    // Partial segment from src along the edge.
    v = g->edge(p.index).src;
    for (const auto& [j, c] : edge_cycles_[static_cast<size_t>(p.index)])
      acc[static_cast<size_t>(j)] += p.offset * Rat(c);
  }
  // Climb the rooted forest from v to its root; edge sign +1 when traversed
  // src -> dst on the way from root to v.
  while (model_->parent_edge(v) >= 0) {
    int e = model_->parent_edge(v);
    int parent = model_->parent_vertex(v);
    int sign = g->edge(e).dst == v ? 1 : -1;
    const Rat len = g->edge(e).length;
    for (const auto& [j, c] : edge_cycles_[static_cast<size_t>(e)])
      acc[static_cast<size_t>(j)] += len * Rat(sign * c);
    v = parent;
  }
  return acc;
}

std::vector<Rat> JacobianData::abel_jacobi(const Divisor& d, const GraphPoint& base) const {
  require(same_graph(d.host(), model_->original()), "divisor host mismatch");
  const auto& g = model_->original();
  require(base.at_vertex ? base.index < g->vertex_count()
                         : base.index < g->edge_count(),
          "base point outside graph");
  for (int c = 0; c < g->component_count(); ++c)
    require(d.degree_on_component(c) == 0,
            "abel_jacobi requires degree zero on every component");
  std::vector<Rat> acc(static_cast<size_t>(genus()), rat(0));
  for (const auto& [p, coeff] : d.coeffs()) {
    auto contrib = path_pairing(model_->to_model(p));
    for (size_t j = 0; j < acc.size(); ++j) acc[j] += rat_of(coeff) * contrib[j];
  }
  return acc;
}

std::vector<Rat> JacobianData::solve_gram(const std::vector<Rat>& v) const {
  const int n = genus();
  check_internal(v.size() == static_cast<size_t>(n), "vector length mismatch");
  // Gaussian elimination on an augmented copy; gram is positive definite.
  std::vector<std::vector<Rat>> a(static_cast<size_t>(n),
                                  std::vector<Rat>(static_cast<size_t>(n) + 1, rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = gram_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    a[static_cast<size_t>(i)][static_cast<size_t>(n)] = v[static_cast<size_t>(i)];
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (a[static_cast<size_t>(row)][static_cast<size_t>(col)] != 0) {
        pivot = row;
        break;
      }
    check_internal(pivot >= 0, "singular pairing matrix");
    std::swap(a[static_cast<size_t>(col)], a[static_cast<size_t>(pivot)]);
    const Rat lead = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
    for (int j = col; j <= n; ++j) a[static_cast<size_t>(col)][static_cast<size_t>(j)] /= lead;
    for (int row = 0; row < n; ++row) {
      if (row == col) continue;
      const Rat f = a[static_cast<size_t>(row)][static_cast<size_t>(col)];
      if (f == 0) continue;
      for (int j = col; j <= n; ++j)
        a[static_cast<size_t>(row)][static_cast<size_t>(j)] -= f * a[static_cast<size_t>(col)][static_cast<size_t>(j)];
    }
  }
  std::vector<Rat> x(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<size_t>(i)] = a[static_cast<size_t>(i)][static_cast<size_t>(n)];
  return x;
}

bool JacobianData::is_lattice(const std::vector<Rat>& v) const {
  require(v.size() == static_cast<size_t>(genus()), "vector length mismatch");
  if (genus() == 0) return true;
  auto x = solve_gram(v);
  return std::all_of(x.begin(), x.end(), [](const Rat& r) { return is_integer(r); });
}

bool JacobianData::classes_equal(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
  require(a.size() == b.size() && a.size() == static_cast<size_t>(genus()),
          "vector length mismatch");
  std::vector<Rat> diff(a.size());
  for (size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
  return is_lattice(diff);
}

Divisor JacobianData::divisor_from_jac(const std::vector<Rat>& v, Int degree,
                                       const GraphPoint& base) const {
  require(v.size() == static_cast<size_t>(genus()), "vector length mismatch");
  const auto& g = model_->graph();
  Divisor on_model(g);
  const auto& cycles = model_->cycles();
  for (size_t j = 0; j < v.size(); ++j) {
    const int e = cycles[j].nontree_edge;
    const Rat len = g->edge(e).length;
    const Int n = rat_floor_div(v[j], len);
    const Rat r = rat_mod(v[j], len);
    const int src = g->edge(e).src;
    const int dst = g->edge(e).dst;
    on_model.add(GraphPoint::on_edge(g, e, r), 1);
    on_model.add(GraphPoint::vertex(src), -1 - n);
    on_model.add(GraphPoint::vertex(dst), n);
  }
  Divisor result = model_->divisor_to_original(on_model);
  result.add(base, degree);
  return result;
}

}  // namespace tropbun
