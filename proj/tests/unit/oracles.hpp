#pragma once

// Independent reference implementations used only by tests. Linear
// equivalence is decided by solving the Laplacian system over Q and checking
// the solution is integral up to a constant per component; rank is the
// literal quantifier over effective divisors. Neither shares machinery with
// the production reduction path.

#include <numeric>
#include <vector>

#include "tropbun/metric_graph.hpp"
#include "tropbun/subdivision.hpp"

namespace tropbun::oracle {

// Solve L x = b on the subdivision graph (unit lengths) over Q; returns
// false when no solution with integral differences exists.
inline bool laplacian_integral_solve(const GraphPtr& g, const std::vector<Int>& b) {
  const int n = g->vertex_count();
  std::vector<std::vector<Rat>> L(static_cast<size_t>(n),
                                  std::vector<Rat>(static_cast<size_t>(n), rat(0)));
  for (int e = 0; e < g->edge_count(); ++e) {
    int a = g->edge(e).src;
    int c = g->edge(e).dst;
    if (a == c) continue;
    L[static_cast<size_t>(a)][static_cast<size_t>(a)] += 1;
    L[static_cast<size_t>(c)][static_cast<size_t>(c)] += 1;
    L[static_cast<size_t>(a)][static_cast<size_t>(c)] -= 1;
    L[static_cast<size_t>(c)][static_cast<size_t>(a)] -= 1;
  }
  // Pin one vertex per component to zero and drop its row.
  std::vector<int> pinned;
  std::vector<char> is_pinned(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    int c = g->component_of(v);
    if (static_cast<size_t>(c) >= pinned.size()) pinned.resize(static_cast<size_t>(c) + 1, -1);
    if (pinned[static_cast<size_t>(c)] < 0) {
      pinned[static_cast<size_t>(c)] = v;
      is_pinned[static_cast<size_t>(v)] = 1;
    }
  }
  std::vector<int> cols;
  for (int v = 0; v < n; ++v)
    if (!is_pinned[static_cast<size_t>(v)]) cols.push_back(v);
  const int m = static_cast<int>(cols.size());
  std::vector<std::vector<Rat>> a(static_cast<size_t>(m),
                                  std::vector<Rat>(static_cast<size_t>(m) + 1, rat(0)));
  {
    int row = 0;
    for (int v = 0; v < n; ++v) {
      if (is_pinned[static_cast<size_t>(v)]) continue;
      for (int j = 0; j < m; ++j)
        a[static_cast<size_t>(row)][static_cast<size_t>(j)] =
            L[static_cast<size_t>(v)][static_cast<size_t>(cols[static_cast<size_t>(j)])];
      a[static_cast<size_t>(row)][static_cast<size_t>(m)] = rat_of(b[static_cast<size_t>(v)]);
      ++row;
    }
  }
  for (int col = 0; col < m; ++col) {
    int pivot = -1;
    for (int row = col; row < m; ++row)
      if (a[static_cast<size_t>(row)][static_cast<size_t>(col)] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return false;  // reduced Laplacian should be regular
    std::swap(a[static_cast<size_t>(col)], a[static_cast<size_t>(pivot)]);
    const Rat lead = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
    for (int j = col; j <= m; ++j) a[static_cast<size_t>(col)][static_cast<size_t>(j)] /= lead;
    for (int row = 0; row < m; ++row) {
      if (row == col) continue;
      const Rat f = a[static_cast<size_t>(row)][static_cast<size_t>(col)];
      if (f == 0) continue;
      for (int j = col; j <= m; ++j)
        a[static_cast<size_t>(row)][static_cast<size_t>(j)] -=
            f * a[static_cast<size_t>(col)][static_cast<size_t>(j)];
    }
  }
  for (int i = 0; i < m; ++i)
    if (!is_integer(a[static_cast<size_t>(i)][static_cast<size_t>(m)])) return false;
  return true;
}

// Metric linear equivalence via a common unit subdivision and the Laplacian.
inline bool linequiv(const Divisor& d1, const Divisor& d2) {
  const auto& host = d1.host();
  for (int c = 0; c < host->component_count(); ++c)
    if (d1.degree_on_component(c) != d2.degree_on_component(c)) return false;
  Divisor diff = d1 - d2;
  std::vector<GraphPoint> extra;
  for (const auto& [p, c] : diff.coeffs()) {
    (void)c;
    if (!p.at_vertex) extra.push_back(p);
  }
  auto sub = subdivide_to_unit(host, extra);
  return laplacian_integral_solve(sub.graph, sub.divisor_vector(diff));
}

// All effective divisors of the given degree supported on vertices.
inline void enumerate_effective(const GraphPtr& g, Int degree,
                                std::vector<std::vector<Int>>& out) {
  std::vector<Int> cur(static_cast<size_t>(g->vertex_count()), 0);
  auto rec = [&](auto&& self, int v, Int left) -> void {
    if (v == g->vertex_count() - 1) {
      cur[static_cast<size_t>(v)] = left;
      out.push_back(cur);
      return;
    }
    for (Int c = 0; c <= left; ++c) {
      cur[static_cast<size_t>(v)] = c;
      self(self, v + 1, left - c);
    }
  };
  if (g->vertex_count() == 0) return;
  rec(rec, 0, degree);
}

// Literal rank on a connected graph: the largest r such that every effective
// degree-r divisor can be subtracted and still leave a winnable class, where
// winnability is itself decided by enumeration plus the Laplacian oracle.
inline int rank(const Divisor& d) {
  const auto& host = d.host();
  std::vector<GraphPoint> extra;
  for (const auto& [p, c] : d.coeffs()) {
    (void)c;
    if (!p.at_vertex) extra.push_back(p);
  }
  auto sub = subdivide_to_unit(host, extra);
  const auto& g = sub.graph;
  auto vec = sub.divisor_vector(d);
  const Int deg = std::accumulate(vec.begin(), vec.end(), Int{0});
  if (deg < 0) return -1;

  auto winnable = [&](const std::vector<Int>& w) -> bool {
    Int wd = std::accumulate(w.begin(), w.end(), Int{0});
    if (wd < 0) return false;
    std::vector<std::vector<Int>> effs;
    enumerate_effective(g, wd, effs);
    for (const auto& f : effs) {
      std::vector<Int> b(w.size());
      for (size_t i = 0; i < w.size(); ++i) b[i] = w[i] - f[i];
      if (laplacian_integral_solve(g, b)) return true;
    }
    return false;
  };

  int r = -1;
  for (Int guess = 0; guess <= deg; ++guess) {
    std::vector<std::vector<Int>> effs;
    enumerate_effective(g, guess, effs);
    bool all = true;
    for (const auto& e : effs) {
      std::vector<Int> w(vec.size());
      for (size_t i = 0; i < vec.size(); ++i) w[i] = vec[i] - e[i];
      if (!winnable(w)) {
        all = false;
        break;
      }
    }
    if (!all) break;
    r = static_cast<int>(guess);
  }
  return r;
}

}  // namespace tropbun::oracle
