#include "tropbun/simple_model.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

namespace tropbun {

namespace {

std::string fresh_id(std::string candidate,
                     std::unordered_set<std::string>& used) {
  while (used.count(candidate)) candidate += "'";
  used.insert(candidate);
  return candidate;
}

}  // namespace

ModelPtr SimpleModel::refine(GraphPtr g) {
  const int ne = g->edge_count();
  // Parallel classes keyed by unordered endpoint pair; loops keyed apart.
  std::map<std::pair<int, int>, int> parallel_count;
  for (int e = 0; e < ne; ++e) {
    if (g->is_loop(e)) continue;
    const auto& edge = g->edge(e);
    parallel_count[{std::min(edge.src, edge.dst),
                    std::max(edge.src, edge.dst)}] += 1;
  }

  std::unordered_set<std::string> used_vertices, used_edges;
  for (int v = 0; v < g->vertex_count(); ++v)
    used_vertices.insert(g->vertex_id(v));
  for (int e = 0; e < ne; ++e) used_edges.insert(g->edge(e).id);

  std::vector<std::string> vertices;
  for (int v = 0; v < g->vertex_count(); ++v)
    vertices.push_back(g->vertex_id(v));
  std::vector<EdgeSpec> specs;
  // Record split decisions to rebuild the piece table after id sorting.
  struct PiecePlan {
    std::string id;
    Rat start;
  };
  std::vector<std::vector<PiecePlan>> plan(ne);

  for (int e = 0; e < ne; ++e) {
    const auto& edge = g->edge(e);
    bool split = g->is_loop(e);
    if (!split) {
      auto key = std::make_pair(std::min(edge.src, edge.dst),
                                std::max(edge.src, edge.dst));
      split = parallel_count[key] >= 3;
    }
    if (!split) {
      specs.push_back({edge.id, g->vertex_id(edge.src), g->vertex_id(edge.dst),
                       edge.length});
      plan[e].push_back({edge.id, Rat(0)});
      continue;
    }
    Rat half = edge.length / 2;
    std::string mid = fresh_id(edge.id + ":m", used_vertices);
    std::string first = fresh_id(edge.id + ":a", used_edges);
    std::string second = fresh_id(edge.id + ":b", used_edges);
    vertices.push_back(mid);
    specs.push_back({first, g->vertex_id(edge.src), mid, half});
    specs.push_back({second, mid, g->vertex_id(edge.dst), half});
    plan[e].push_back({first, Rat(0)});
    plan[e].push_back({second, half});
  }

  GraphPtr refined = MetricGraph::build(std::move(vertices), std::move(specs));
  std::vector<std::vector<std::pair<int, Rat>>> pieces(ne);
  for (int e = 0; e < ne; ++e)
    for (const PiecePlan& p : plan[e])
      pieces[e].emplace_back(refined->edge_index(p.id), p.start);
  return finish(std::move(g), std::move(refined), std::move(pieces), {});
}

ModelPtr SimpleModel::wrap(GraphPtr g, const std::vector<int>& edge_priority) {
  for (int e = 0; e < g->edge_count(); ++e)
    check_internal(!g->is_loop(e), "wrap needs a loop-free graph");
  std::vector<std::vector<std::pair<int, Rat>>> pieces(g->edge_count());
  for (int e = 0; e < g->edge_count(); ++e)
    pieces[e].emplace_back(e, Rat(0));
  return finish(g, g, std::move(pieces), edge_priority);
}

ModelPtr SimpleModel::finish(
    GraphPtr original, GraphPtr refined,
    std::vector<std::vector<std::pair<int, Rat>>> pieces,
    std::vector<int> edge_priority) {
  auto m = std::make_shared<SimpleModel>();
  m->original_ = std::move(original);
  m->graph_ = std::move(refined);
  m->pieces_ = std::move(pieces);
  const MetricGraph& g = *m->graph_;

  m->piece_origin_.assign(g.edge_count(), {-1, Rat(0)});
  for (int e = 0; e < static_cast<int>(m->pieces_.size()); ++e)
    for (const auto& [me, start] : m->pieces_[e])
      m->piece_origin_[me] = {e, start};

  m->vertex_origin_.assign(g.vertex_count(), GraphPoint::vertex(0));
  for (int v = 0; v < g.vertex_count(); ++v) {
    const std::string& id = g.vertex_id(v);
    if (m->original_->has_vertex(id)) {
      m->vertex_origin_[v] = GraphPoint::vertex(m->original_->vertex_index(id));
    } else {
      // Midpoint of a split edge: it is the dst of some piece starting at 0.
      bool found = false;
      for (const auto& [eidx, hend] : g.incident(v)) {
        if (hend != 1) continue;
        auto [orig, start] = m->piece_origin_[eidx];
        Rat off = start + g.edge(eidx).length;
        if (off < m->original_->edge(orig).length) {
          m->vertex_origin_[v] = GraphPoint{false, orig, off};
          found = true;
          break;
        }
      }
      check_internal(found, "refined vertex without an origin");
    }
  }

  // Deterministic spanning forest: Kruskal over edges, lowest priority value
  // first, index order by default.
  std::vector<int> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  if (!edge_priority.empty()) {
    check_internal(edge_priority.size() == order.size(),
                   "edge priority size mismatch");
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return edge_priority[a] < edge_priority[b];
    });
  }
  std::vector<int> uf(g.vertex_count());
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&uf](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  m->in_forest_.assign(g.edge_count(), 0);
  for (int e : order) {
    int a = find(g.edge(e).src), b = find(g.edge(e).dst);
    if (a != b) {
      uf[std::max(a, b)] = std::min(a, b);
      m->in_forest_[e] = 1;
    }
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (!m->in_forest_[e]) m->nontree_edges_.push_back(e);

  // Root the forest at each component's lowest vertex.
  m->parent_vertex_.assign(g.vertex_count(), -1);
  m->parent_edge_.assign(g.vertex_count(), -1);
  m->component_root_.assign(g.component_count(), -1);
  std::vector<char> seen(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    int c = g.component_of(v);
    if (m->component_root_[c] >= 0) continue;
    m->component_root_[c] = v;
    std::vector<int> stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto& [eidx, hend] : g.incident(x)) {
        if (!m->in_forest_[eidx]) continue;
        int y = hend == 0 ? g.edge(eidx).dst : g.edge(eidx).src;
        if (seen[y]) continue;
        seen[y] = 1;
        m->parent_vertex_[y] = x;
        m->parent_edge_[y] = eidx;
        stack.push_back(y);
      }
    }
  }

  // Fundamental cycles: non-tree edge with +1 plus the forest path from its
  // dst back to its src.
  auto root_path = [&](int v) {
    // (edge, sign) from v up to the root; sign +1 when walked src->dst.
    std::vector<std::pair<int, int>> path;
    while (m->parent_edge_[v] >= 0) {
      int e = m->parent_edge_[v];
      int up = m->parent_vertex_[v];
      path.emplace_back(e, g.edge(e).src == v ? 1 : -1);
      v = up;
    }
    return path;
  };
  for (int e : m->nontree_edges_) {
    auto from_dst = root_path(g.edge(e).dst);
    auto from_src = root_path(g.edge(e).src);
    while (!from_dst.empty() && !from_src.empty() &&
           from_dst.back() == from_src.back()) {
      from_dst.pop_back();
      from_src.pop_back();
    }
    Cycle cyc;
    cyc.nontree_edge = e;
    std::map<int, int> coeff;
    coeff[e] += 1;
    for (const auto& [pe, sign] : from_dst) coeff[pe] += sign;
    for (const auto& [pe, sign] : from_src) coeff[pe] -= sign;
    for (const auto& [pe, c] : coeff) {
      check_internal(c == 0 || c == 1 || c == -1, "bad cycle coefficient");
      if (c != 0) cyc.coeff.emplace_back(pe, c);
    }
    m->cycles_.push_back(std::move(cyc));
  }
  check_internal(static_cast<int>(m->cycles_.size()) ==
                     g.edge_count() - g.vertex_count() + g.component_count(),
                 "cycle count mismatch");
  return m;
}

int SimpleModel::cycle_coeff(int j, int e) const {
  const auto& coeff = cycles_.at(j).coeff;
  auto it = std::lower_bound(
      coeff.begin(), coeff.end(), e,
      [](const std::pair<int, int>& a, int b) { return a.first < b; });
  return (it != coeff.end() && it->first == e) ? it->second : 0;
}

GraphPoint SimpleModel::to_model(const GraphPoint& p) const {
  if (p.at_vertex)
    return GraphPoint::vertex(graph_->vertex_index(original_->vertex_id(p.index)));
  const auto& parts = pieces_.at(p.index);
  int lo = 0;
  for (int i = 1; i < static_cast<int>(parts.size()); ++i)
    if (parts[i].second < p.offset) lo = i;
  auto [me, start] = parts[lo];
  return GraphPoint::on_edge(*graph_, me, p.offset - start);
}

GraphPoint SimpleModel::to_original(const GraphPoint& p) const {
  if (p.at_vertex) {
    GraphPoint o = vertex_origin_.at(p.index);
    return o;
  }
  auto [orig, start] = piece_origin_.at(p.index);
  return GraphPoint::on_edge(*original_, orig, start + p.offset);
}

Divisor SimpleModel::divisor_to_model(const Divisor& d) const {
  check_internal(same_graph(d.host(), original_), "divisor host mismatch");
  Divisor r(graph_);
  for (const auto& [p, c] : d.coeffs()) r.add(to_model(p), c);
  return r;
}

Divisor SimpleModel::divisor_to_original(const Divisor& d) const {
  check_internal(same_graph(d.host(), graph_), "divisor host mismatch");
  Divisor r(original_);
  for (const auto& [p, c] : d.coeffs()) r.add(to_original(p), c);
  return r;
}

}  // namespace tropbun
