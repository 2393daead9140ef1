#include <doctest.h>

#include "tropbun/bundles.hpp"
#include "tropbun/errors.hpp"
#include "tropbun/jacobian.hpp"
#include "tropbun/standard_graphs.hpp"

using namespace tropbun;

namespace {

GraphPoint tv(const CoverPtr& cov, const std::string& id) {
  return GraphPoint::vertex(cov->total()->vertex_index(id));
}

GraphPoint tp(const CoverPtr& cov, const std::string& edge_id, const Rat& off) {
  return GraphPoint::on_edge(cov->total(), cov->total()->edge_index(edge_id), off);
}

bool same_divisor(const Divisor& a, const Divisor& b) { return (a - b).is_zero(); }

}  // namespace

TEST_CASE("diagonal slopes on a trivial double cover of the segment") {
  auto seg = segment_graph();
  auto cov = FreeCover::trivial(seg, 2);
  Divisor d(cov->total());
  d.add(tv(cov, "a@1"), 2);
  d.add(tv(cov, "a@2"), 3);
  Multidivisor md{cov, d};

  auto cc = cocycle_of(md);
  int s = cov->base_model()->graph()->edge_index("s");
  CHECK(cc.fns[s][0] == AffineFn{2, Rat(0)});
  CHECK(cc.fns[s][1] == AffineFn{3, Rat(0)});

  auto back = multidivisor_of(cc);
  CHECK(same_divisor(back.div, d));
  CHECK(bundle_degree(md) == 5);
}

TEST_CASE("line bundle transition of a single interior point on the circle") {
  auto circ = circle_graph(rat(1));
  auto cov = FreeCover::trivial(circ, 1);
  Divisor d(cov->total());
  d.add(tp(cov, "e2@1", rat(1, 3)), 1);
  Multidivisor md{cov, d};

  auto cc = cocycle_of(md);
  int e1 = cov->base_model()->graph()->edge_index("e1");
  int e2 = cov->base_model()->graph()->edge_index("e2");
  CHECK(cc.fns[e2][0] == AffineFn{1, rat(-1, 3)});
  CHECK(cc.fns[e1][0] == AffineFn{0, Rat(0)});

  auto back = multidivisor_of(cc);
  CHECK(same_divisor(back.div, d));
}

TEST_CASE("vertex chip away from the root round trips exactly") {
  auto circ = circle_graph(rat(1));
  auto cov = FreeCover::trivial(circ, 1);
  Divisor d(cov->total());
  d.add(tv(cov, "v@1"), 1);
  Multidivisor md{cov, d};

  auto cc = cocycle_of(md);
  int e2 = cov->base_model()->graph()->edge_index("e2");
  CHECK(cc.fns[e2][0] == AffineFn{1, rat(-1, 2)});

  auto back = multidivisor_of(cc);
  CHECK(same_divisor(back.div, d));
}

TEST_CASE("slope on the tree edge normalizes to the class of the base vertex") {
  auto circ = circle_graph(rat(1));
  auto cov = FreeCover::trivial(circ, 1);
  BundleCocycle cc;
  cc.cover = cov;
  cc.fns.assign(2, {AffineFn{0, Rat(0)}});
  int e1 = cov->base_model()->graph()->edge_index("e1");
  cc.fns[e1][0] = AffineFn{1, Rat(0)};

  auto md = multidivisor_of(cc);
  Divisor expect(cov->total());
  expect.add(tv(cov, "u@1"), 1);
  CHECK(same_divisor(md.div, expect));
}

TEST_CASE("flat shifts of a split rank-two bundle on the circle") {
  auto circ = circle_graph(rat(1));
  auto cov = FreeCover::trivial(circ, 2);
  Divisor d(cov->total());
  d.add(tp(cov, "e2@2", rat(1, 3)), 1);
  d.add(tv(cov, "u@2"), -1);
  Multidivisor md{cov, d};

  auto rep = to_local_system(md);
  CHECK(rep.rank == 2);
  CHECK(rep.edges.count("e1") == 0);
  CHECK(rep.edges.at("e2").shifts == std::vector<Rat>{Rat(0), rat(1, 3)});
  CHECK(rep.edges.at("e2").perm == Perm{0, 1});

  auto back = from_local_system(circ, rep);
  CHECK(same_divisor(back.div, d));
}

TEST_CASE("swap local system lands in the class of the shift sum") {
  auto circ = circle_graph(rat(1));
  LocalSystemRep rep;
  rep.rank = 2;
  rep.edges["e1"] = LocalSystemEdge{Perm{0, 1}, {Rat(0), Rat(0)}};
  rep.edges["e2"] = LocalSystemEdge{Perm{1, 0}, {rat(1, 5), rat(1, 7)}};

  auto md = from_local_system(circ, rep);
  CHECK(md.cover->is_connected());
  CHECK(md.div.degree() == 0);

  JacobianData jac(md.cover->total_model());
  auto cls = jac.abel_jacobi(md.div, tv(md.cover, "u@1"));
  CHECK(jac.classes_equal(cls, {rat(12, 35)}));

  // The canonical flat presentation concentrates the class on the one
  // non-forest lift of e2.
  auto rep2 = to_local_system(md);
  CHECK(rep2.edges.at("e2").perm == Perm{1, 0});
  CHECK(rep2.edges.at("e2").shifts == std::vector<Rat>{Rat(0), rat(12, 35)});
  CHECK(rep2.edges.count("e1") == 0);

  auto md2 = from_local_system(circ, rep2);
  CHECK(same_divisor(md2.div, md.div));
  CHECK(bundle_iso(md, md2));
}

TEST_CASE("local system conversion rejects nonzero component degree") {
  auto circ = circle_graph(rat(1));
  auto cov = FreeCover::trivial(circ, 2);
  Divisor d(cov->total());
  d.add(tv(cov, "u@1"), 1);
  d.add(tv(cov, "u@2"), -1);
  CHECK_THROWS_AS(to_local_system(Multidivisor{cov, d}), invalid_input);

  LocalSystemRep bad;
  bad.rank = 2;
  bad.edges["e2"] = LocalSystemEdge{Perm{1, 0}, {Rat(0)}};
  CHECK_THROWS_AS(from_local_system(circ, bad), invalid_input);
}

TEST_CASE("sum tensor dual and determinant degrees") {
  auto theta = theta_graph();
  auto conn = FreeCover::build(theta, 2, {{"e2:b", Perm{1, 0}}});
  auto triv = FreeCover::trivial(theta, 2);

  Divisor d1(conn->total());
  d1.add(tv(conn, "u@1"), 2);
  d1.add(tv(conn, "v@2"), 1);
  Multidivisor e{conn, d1};

  Divisor d2(triv->total());
  d2.add(tv(triv, "u@1"), -1);
  Multidivisor f{triv, d2};

  auto sum = direct_sum(e, f);
  CHECK(sum.rank() == 4);
  CHECK(bundle_degree(sum) == 2);

  auto prod = tensor(e, f);
  CHECK(prod.rank() == 4);
  CHECK(bundle_degree(prod) == 2 * 3 + 2 * (-1));

  CHECK(bundle_degree(dual(e)) == -3);
  auto det = determinant(e);
  CHECK(det.rank() == 1);
  CHECK(bundle_degree(det) == 3);
  CHECK(same_divisor(determinant(sum).div, det.div + determinant(f).div));
}

TEST_CASE("tensor with the trivial line bundle is the identity") {
  auto theta = theta_graph();
  auto conn = FreeCover::build(theta, 2, {{"e2:b", Perm{1, 0}}});
  Divisor d(conn->total());
  d.add(tv(conn, "u@1"), 1);
  d.add(tp(conn, "e3:a@2", rat(1, 2)), 1);
  Multidivisor e{conn, d};

  Multidivisor triv = line_bundle(theta, Divisor(theta));
  auto prod = tensor(e, triv);
  CHECK(prod.rank() == 2);
  CHECK(bundle_iso(prod, e));

  // Tensoring with a line bundle adds the pulled back divisor.
  Divisor p(theta);
  p.add(GraphPoint::vertex(theta->vertex_index("v")), 1);
  auto shifted = tensor(e, line_bundle(theta, p));
  CHECK(bundle_degree(shifted) == bundle_degree(e) + 2);
}

TEST_CASE("bundle isomorphism respects deck moves and detects distinct classes") {
  auto circ = circle_graph(rat(1));
  auto cov = FreeCover::build(circ, 2, {{"e2", Perm{1, 0}}});

  Divisor a(cov->total());
  a.add(tv(cov, "u@1"), 1);
  Divisor b(cov->total());
  b.add(tv(cov, "u@2"), 1);
  Divisor c(cov->total());
  c.add(tv(cov, "v@1"), 1);

  CHECK(bundle_iso({cov, a}, {cov, a}));
  CHECK(bundle_iso({cov, a}, {cov, b}));
  CHECK_FALSE(bundle_iso({cov, a}, {cov, c}));

  auto triv = FreeCover::trivial(circ, 2);
  Divisor t(triv->total());
  t.add(tv(triv, "u@1"), 1);
  CHECK_FALSE(bundle_iso({cov, a}, {triv, t}));
  CHECK_FALSE(bundle_iso({cov, a}, line_bundle(circ, Divisor(circ))));
}

TEST_CASE("stability splits by cover connectivity and component slopes") {
  auto circ = circle_graph(rat(1));
  auto conn = FreeCover::build(circ, 2, {{"e2", Perm{1, 0}}});
  Divisor d(conn->total());
  d.add(tv(conn, "u@1"), 1);
  auto st = stability({conn, d});
  CHECK(st.stable);
  CHECK(st.semistable);
  CHECK(st.slope == rat(1, 2));

  auto triv = FreeCover::trivial(circ, 2);
  Divisor lop(triv->total());
  lop.add(tv(triv, "u@1"), 1);
  auto st2 = stability({triv, lop});
  CHECK_FALSE(st2.stable);
  CHECK_FALSE(st2.semistable);
  CHECK(st2.component_slopes == std::vector<Rat>{Rat(1), Rat(0)});

  Divisor bal(triv->total());
  bal.add(tv(triv, "u@1"), 1);
  bal.add(tv(triv, "v@2"), 1);
  auto st3 = stability({triv, bal});
  CHECK_FALSE(st3.stable);
  CHECK(st3.semistable);
  CHECK(st3.slope == Rat(1));
}

TEST_CASE("weil riemann roch on small bundles") {
  auto theta = theta_graph();
  // Rank one: reduces to ordinary Riemann-Roch.
  Divisor p(theta);
  p.add(GraphPoint::vertex(theta->vertex_index("u")), 2);
  auto wr = wrr_check(line_bundle(theta, p));
  CHECK(wr.holds);
  CHECK(wr.n == 1);
  CHECK(wr.degree == 2);
  CHECK(wr.euler == -1);

  auto conn = FreeCover::build(theta, 2, {{"e2:b", Perm{1, 0}}});
  Divisor d(conn->total());
  d.add(tv(conn, "u@1"), 1);
  d.add(tv(conn, "v@2"), 2);
  auto wr2 = wrr_check({conn, d});
  CHECK(wr2.holds);
  CHECK(wr2.rank_e - wr2.rank_twisted == 3 + 2 * (-1));

  auto circ = circle_graph(rat(2));
  auto cov3 = FreeCover::build(circ, 3, {{"e2", Perm{1, 2, 0}}});
  Divisor z(cov3->total());
  z.add(tp(cov3, "e1@2", rat(1, 4)), 1);
  z.add(tv(cov3, "u@1"), -2);
  auto wr3 = wrr_check({cov3, z});
  CHECK(wr3.holds);
  CHECK(wr3.rank_e - wr3.rank_twisted == -1);
}

TEST_CASE("round trip through the cocycle preserves the bundle class") {
  auto theta = theta_graph();
  auto conn = FreeCover::build(theta, 2, {{"e2:b", Perm{1, 0}}});
  Divisor d(conn->total());
  d.add(tp(conn, "e1:a@1", rat(1, 2)), 1);
  d.add(tp(conn, "e3:a@2", rat(1, 4)), 1);
  d.add(tv(conn, "u@1"), -1);
  Multidivisor md{conn, d};

  auto back = multidivisor_of(cocycle_of(md));
  CHECK(bundle_degree(back) == 1);
  CHECK(bundle_iso(back, md));

  auto cov3 = FreeCover::build(theta, 3, {{"e2:b", Perm{1, 2, 0}}, {"e3:b", Perm{1, 0, 2}}});
  Divisor d3(cov3->total());
  d3.add(tv(cov3, "e1:m@2"), 1);
  d3.add(tp(cov3, "e2:a@3", rat(1, 3)), 2);
  Multidivisor md3{cov3, d3};
  auto back3 = multidivisor_of(cocycle_of(md3));
  CHECK(bundle_degree(back3) == 3);
  CHECK(bundle_iso(back3, md3));
}

TEST_CASE("direct sums commute and split back into their summands") {
  auto theta = theta_graph();
  auto e = line_bundle(theta, canonical_divisor(theta));
  auto cov2 = FreeCover::build(theta, 2, {{"e2:b", Perm{1, 0}}});
  Divisor d(cov2->total());
  d.add(tp(cov2, "e3:a@1", rat(1, 3)), 1);
  Multidivisor f{cov2, d};

  auto ef = direct_sum(e, f);
  auto fe = direct_sum(f, e);
  CHECK(ef.rank() == 3);
  CHECK(bundle_degree(ef) == 3);
  CHECK(bundle_iso(ef, fe));

  auto parts = summands(ef);
  REQUIRE(parts.size() == 2);
  auto glued = direct_sum(parts[0], parts[1]);
  CHECK(bundle_iso(glued, ef));

  auto whole = summands(f);
  REQUIRE(whole.size() == 1);
  CHECK(bundle_iso(whole[0], f));
}

TEST_CASE("pullback multiplies degree and preserves rank") {
  auto theta = theta_graph();
  auto f = FreeCover::build(theta, 2, {{"e2:b", Perm{1, 0}}});
  Divisor d(theta);
  d.add(GraphPoint::vertex(theta->vertex_index("u")), 1);
  d.add(GraphPoint::on_edge(theta, theta->edge_index("e2"), rat(1, 4)), 1);
  auto line = line_bundle(theta, d);

  auto pb = pullback_bundle(f, line);
  CHECK(pb.rank() == 1);
  CHECK(bundle_degree(pb) == 4);
  CHECK(bundle_iso(pb, line_bundle(f->total(), f->pullback(d))));

  auto cov2 = FreeCover::build(theta, 2, {{"e3:b", Perm{1, 0}}});
  Divisor d2(cov2->total());
  d2.add(tv(cov2, "v@2"), 2);
  auto pb2 = pullback_bundle(f, Multidivisor{cov2, d2});
  CHECK(pb2.rank() == 2);
  CHECK(bundle_degree(pb2) == 4);
}

TEST_CASE("pushforward composes covers and keeps the divisor") {
  auto circ = circle_graph(rat(1));
  auto f = FreeCover::build(circ, 2, {{"e2", Perm{1, 0}}});

  auto g1 = FreeCover::trivial(f->total(), 1);
  Divisor d(g1->total());
  d.add(tp(g1, "e1@2@1", rat(1, 4)), 1);
  auto push = pushforward_bundle(f, Multidivisor{g1, d});
  CHECK(push.rank() == 2);
  CHECK(bundle_degree(push) == 1);
  Divisor want(push.cover->total());
  want.add(tp(push.cover, "e1@2", rat(1, 4)), 1);
  CHECK(same_divisor(push.div, want));
  CHECK(bundle_iso(push, Multidivisor{f, want}));

  auto g2 = FreeCover::build(f->total(), 2, {{"e2@1", Perm{1, 0}}});
  Divisor z(g2->total());
  z.add(tv(g2, "u@1@1"), 1);
  auto push2 = pushforward_bundle(f, Multidivisor{g2, z});
  CHECK(push2.rank() == 4);
  CHECK(bundle_degree(push2) == 1);
  CHECK(push2.cover->is_connected());
  CHECK(stability(push2).stable);
}

TEST_CASE("tensor of line bundles adds the divisors") {
  auto theta = theta_graph();
  Divisor p(theta);
  p.add(GraphPoint::on_edge(theta, theta->edge_index("e1"), rat(1, 3)), 1);
  Divisor q(theta);
  q.add(GraphPoint::vertex(theta->vertex_index("v")), 1);
  auto prod = tensor(line_bundle(theta, p), line_bundle(theta, q));
  CHECK(prod.rank() == 1);
  CHECK(bundle_iso(prod, line_bundle(theta, p + q)));
}

TEST_CASE("double dual restores the divisor exactly") {
  auto circ = circle_graph(rat(1));
  auto cov = FreeCover::build(circ, 2, {{"e2", Perm{1, 0}}});
  Divisor d(cov->total());
  d.add(tp(cov, "e1@1", rat(1, 5)), 2);
  d.add(tv(cov, "v@2"), -1);
  Multidivisor md{cov, d};
  auto dd = dual(dual(md));
  CHECK(same_divisor(dd.div, d));
  CHECK(bundle_degree(dual(md)) == -1);
}

TEST_CASE("trivial rank two bundle on the circle has one extra section") {
  auto circ = circle_graph(rat(1));
  auto e = direct_sum(line_bundle(circ, Divisor(circ)), line_bundle(circ, Divisor(circ)));
  CHECK(bn_rank_bundle(e) == 1);
  auto wr = wrr_check(e);
  CHECK(wr.holds);
  CHECK(wr.rank_e == 1);
  CHECK(wr.rank_twisted == 1);
}

TEST_CASE("matrix view of a cocycle edge is invertible with the right entries") {
  auto circ = circle_graph(rat(1));
  auto cov = FreeCover::build(circ, 2, {{"e2", Perm{1, 0}}});
  Divisor d(cov->total());
  d.add(tp(cov, "e2@1", rat(1, 3)), 1);
  auto cc = cocycle_of(Multidivisor{cov, d});

  int e2 = cov->base_model()->graph()->edge_index("e2");
  auto t = cocycle_matrix(cc, e2);
  REQUIRE(t.size() == 2);
  CHECK(trop_invertible(t));
  CHECK_FALSE(t[0][0].has_value());
  CHECK_FALSE(t[1][1].has_value());
  CHECK(t[1][0] == TropEntry{cc.fns[e2][0]});
  CHECK(t[0][1] == TropEntry{cc.fns[e2][1]});

  auto det = trop_det(t);
  CHECK(det.slope == cc.fns[e2][0].slope + cc.fns[e2][1].slope);
  CHECK(det.c == cc.fns[e2][0].c + cc.fns[e2][1].c);

  TropMatrix bad = t;
  bad[0][0] = AffineFn{0, Rat(0)};
  CHECK_FALSE(trop_invertible(bad));
  TropMatrix empty_row = t;
  empty_row[1][0].reset();
  CHECK_FALSE(trop_invertible(empty_row));
}

TEST_CASE("block splits need the leading sheets preserved") {
  TropMatrix diag{{TropEntry{AffineFn{1, Rat(0)}}, std::nullopt},
                  {std::nullopt, TropEntry{AffineFn{0, rat(1, 2)}}}};
  auto [a, b] = split_block_triangular(diag, 1);
  REQUIRE(a.size() == 1);
  REQUIRE(b.size() == 1);
  CHECK(a[0][0] == TropEntry{AffineFn{1, Rat(0)}});
  CHECK(b[0][0] == TropEntry{AffineFn{0, rat(1, 2)}});

  TropMatrix perm3(3, std::vector<TropEntry>(3));
  perm3[1][0] = AffineFn{0, Rat(0)};
  perm3[0][1] = AffineFn{2, Rat(0)};
  perm3[2][2] = AffineFn{0, rat(1, 3)};
  auto [top, rest] = split_block_triangular(perm3, 2);
  CHECK(top.size() == 2);
  CHECK(rest.size() == 1);
  CHECK(rest[0][0] == TropEntry{AffineFn{0, rat(1, 3)}});

  TropMatrix cross(2, std::vector<TropEntry>(2));
  cross[0][1] = AffineFn{0, Rat(0)};
  cross[1][0] = AffineFn{0, Rat(0)};
  CHECK_THROWS_AS(split_block_triangular(cross, 1), invalid_input);
  CHECK_THROWS_AS(split_block_triangular(diag, 0), invalid_input);
  CHECK_THROWS_AS(split_block_triangular(diag, 2), invalid_input);
}

TEST_CASE("edgewise tropical determinants assemble the determinant bundle") {
  auto theta = theta_graph();
  auto cov = FreeCover::build(theta, 2, {{"e2:b", Perm{1, 0}}});
  Divisor d(cov->total());
  d.add(tp(cov, "e1:a@1", rat(1, 2)), 1);
  d.add(tv(cov, "u@2"), 1);
  Multidivisor md{cov, d};
  auto cc = cocycle_of(md);

  const GraphPtr& bmg = cov->base_model()->graph();
  BundleCocycle detcc;
  detcc.cover = FreeCover::trivial(theta, 1);
  detcc.fns.assign(bmg->edge_count(), {AffineFn{}});
  for (int e = 0; e < bmg->edge_count(); ++e)
    detcc.fns[e][0] = trop_det(cocycle_matrix(cc, e));

  auto via_matrix = multidivisor_of(detcc);
  CHECK(bundle_iso(via_matrix, determinant(md)));
}
