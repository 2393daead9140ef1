#include <doctest.h>

#include "tropbun/covers.hpp"
#include "tropbun/divisor_theory.hpp"
#include "tropbun/errors.hpp"
#include "tropbun/standard_graphs.hpp"

using namespace tropbun;

TEST_CASE("permutation helpers") {
  Perm a{1, 2, 0};
  Perm b{1, 0, 2};
  CHECK(compose(a, b) == Perm{2, 1, 0});
  CHECK(compose(b, a) == Perm{0, 2, 1});
  CHECK(compose(a, inverse_perm(a)) == identity_perm(3));
  CHECK(is_perm(a));
  CHECK(!is_perm(Perm{0, 0, 1}));
  CHECK(!is_perm(Perm{0, 3, 1}));
}

TEST_CASE("connected double cover of the circle is a longer circle") {
  auto circ = circle_graph(rat(1));
  auto cov = FreeCover::build(circ, 2, {{"e2", Perm{1, 0}}});
  CHECK(cov->total()->vertex_count() == 4);
  CHECK(cov->total()->edge_count() == 4);
  CHECK(cov->is_connected());
  CHECK(cov->total()->genus_per_component() == std::vector<int>{1});
  CHECK(cov->total()->total_length() == rat(2));

  auto triv = FreeCover::trivial(circ, 2);
  CHECK(triv->total()->component_count() == 2);
  CHECK(triv->total()->genus_per_component() == std::vector<int>{1, 1});
}

TEST_CASE("cover rejects bad input") {
  auto circ = circle_graph(rat(1));
  CHECK_THROWS_AS(FreeCover::build(circ, 0, {}), invalid_input);
  CHECK_THROWS_AS(FreeCover::build(circ, 2, {{"nope", Perm{1, 0}}}), invalid_input);
  CHECK_THROWS_AS(FreeCover::build(circ, 2, {{"e2", Perm{0, 0}}}), invalid_input);
  CHECK_THROWS_AS(FreeCover::build(circ, 2, {{"e2", Perm{0}}}), invalid_input);
}

TEST_CASE("lift and projection round trip") {
  auto theta = theta_graph();
  auto cov = FreeCover::build(theta, 2, {{"e2:b", Perm{1, 0}}});
  const auto& bm = cov->base_model()->graph();
  for (int e = 0; e < bm->edge_count(); ++e) {
    for (int k = 0; k < 2; ++k) {
      auto p = GraphPoint::on_edge(bm, e, bm->edge(e).length / 3);
      auto lifted = cov->lift_point(p, k);
      CHECK(cov->project_point(lifted) == p);
      CHECK(cov->edge_down(cov->edge_lift(e, k)) == std::pair<int, int>{e, k});
    }
  }
  for (int v = 0; v < bm->vertex_count(); ++v)
    for (int k = 0; k < 2; ++k)
      CHECK(cov->vertex_down(cov->vertex_lift(v, k)) == std::pair<int, int>{v, k});
}

TEST_CASE("pullback and pushforward of divisors") {
  auto theta = theta_graph();
  auto cov = FreeCover::build(theta, 3, {{"e2:b", Perm{1, 2, 0}}});
  Divisor d(theta);
  d.add(GraphPoint::vertex(theta->vertex_index("u")), 2);
  d.add(GraphPoint::on_edge(theta, theta->edge_index("e3"), rat(1, 4)), -1);
  auto up = cov->pullback(d);
  CHECK(up.degree() == 3 * d.degree());
  auto down = cov->pushforward(up);
  CHECK((down - d * 3).is_zero());

  // The canonical divisor pulls back to the canonical divisor.
  auto k_base = canonical_divisor(theta);
  auto k_tot = canonical_divisor(cov->total());
  CHECK((cov->pullback(k_base) - k_tot).is_zero());
}

TEST_CASE("pullback preserves linear equivalence") {
  auto circ = circle_graph(rat(1));
  auto cov = FreeCover::build(circ, 2, {{"e2", Perm{1, 0}}});
  RankContext ctx;
  // fire the u-ball of radius 1/4 on the base circle
  Divisor principal(circ);
  principal.add(GraphPoint::vertex(circ->vertex_index("u")), -2);
  principal.add(circle_point(circ, rat(1, 4)), 1);
  principal.add(circle_point(circ, rat(-1, 4)), 1);
  CHECK(ctx.linequiv(principal, Divisor(circ)));
  auto up = cov->pullback(principal);
  RankContext ctx2;
  CHECK(ctx2.linequiv(up, Divisor(cov->total())));
}

TEST_CASE("cover enumeration counts") {
  auto circ = circle_graph(rat(1));
  CHECK(enumerate_covers(circ, 1).size() == 1);
  CHECK(enumerate_covers(circ, 2).size() == 2);
  CHECK(enumerate_covers(circ, 3).size() == 3);
  CHECK(enumerate_covers(circ, 4).size() == 5);
  CHECK(enumerate_covers(circ, 5).size() == 7);

  auto theta = theta_graph();
  CHECK(enumerate_covers(theta, 1).size() == 1);
  CHECK(enumerate_covers(theta, 2).size() == 4);
  CHECK(enumerate_covers(theta, 3).size() == 11);

  CHECK_THROWS_AS(enumerate_covers(theta, 6), size_limit_error);
}

TEST_CASE("enumerated covers are pairwise non-isomorphic and exhaustive") {
  auto theta = theta_graph();
  auto reps = enumerate_covers(theta, 3);
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = i + 1; j < reps.size(); ++j)
      CHECK(cover_isomorphisms(*reps[i], *reps[j]).empty());
  // Every cover is isomorphic to exactly one representative.
  std::vector<Perm> all;
  Perm p = identity_perm(3);
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int checked = 0;
  for (const auto& s1 : all)
    for (const auto& s2 : all) {
      auto cov = FreeCover::build(theta, 3, {{"e2:b", s1}, {"e3:b", s2}});
      int hits = 0;
      for (const auto& rep : reps)
        if (!cover_isomorphisms(*cov, *rep).empty()) ++hits;
      CHECK(hits == 1);
      ++checked;
    }
  CHECK(checked == 36);
}

TEST_CASE("deck groups") {
  auto theta = theta_graph();
  auto cov = FreeCover::build(theta, 2, {{"e2:b", Perm{1, 0}}});
  CHECK(cov->is_connected());
  CHECK(deck_group(*cov).size() == 2);

  auto triv = FreeCover::trivial(theta, 3);
  CHECK(deck_group(*triv).size() == 6);

  // Connected 3-sheeted cyclic cover of the circle: deck group Z/3.
  auto circ = circle_graph(rat(1));
  auto cyc = FreeCover::build(circ, 3, {{"e2", Perm{1, 2, 0}}});
  CHECK(cyc->is_connected());
  CHECK(deck_group(*cyc).size() == 3);
}

TEST_CASE("union and fibered product") {
  auto circ = circle_graph(rat(1));
  auto conn = FreeCover::build(circ, 2, {{"e2", Perm{1, 0}}});
  auto uni = disjoint_union(*conn, *conn);
  CHECK(uni->degree() == 4);
  CHECK(uni->total()->component_count() == 2);
  CHECK(uni->total()->genus_per_component() == std::vector<int>{1, 1});

  auto prod = fibered_product(*conn, *conn);
  CHECK(prod->degree() == 4);
  CHECK(prod->total()->component_count() == 2);
  CHECK(prod->total()->genus_per_component() == std::vector<int>{1, 1});
  CHECK(prod->total()->total_length() == rat(4));

  auto trivprod = fibered_product(*conn, *FreeCover::trivial(circ, 1));
  CHECK(trivprod->degree() == 2);
  CHECK(trivprod->is_connected());
}

TEST_CASE("covers over a dumbbell base handle loop refinement") {
  auto db = dumbbell_graph();
  // sigma on one loop half gives a connected double cover.
  auto cov = FreeCover::build(db, 2, {{"l1:b", Perm{1, 0}}});
  CHECK(cov->is_connected());
  // chi doubles: base chi -1, so total genus is 3.
  CHECK(cov->total()->genus_per_component() == std::vector<int>{3});
  auto k_tot = canonical_divisor(cov->total());
  CHECK((cov->pullback(canonical_divisor(db)) - k_tot).is_zero());
}
