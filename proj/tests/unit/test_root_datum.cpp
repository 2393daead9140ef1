#include <doctest.h>

#include <algorithm>
#include <set>

#include "tropbun/errors.hpp"
#include "tropbun/root_datum.hpp"

using namespace tropbun;

TEST_CASE("axioms hold for the standard data and fail for the fixtures") {
  auto report = validate(gl_datum(2));
  CHECK(report.axiom_i);
  CHECK(report.axiom_ii);
  CHECK(report.ok);
  CHECK(gl_datum(2).roots.size() == 2);

  RootDatum torus{3, {}, {}};
  CHECK(validate(torus).ok);

  RootDatum pairing_one{1, {{1}}, {{1}}};
  auto bad1 = validate(pairing_one);
  CHECK_FALSE(bad1.axiom_i);
  CHECK_FALSE(bad1.ok);

  RootDatum half_gl2{2, {{1, -1}}, {{1, -1}}};
  auto bad2 = validate(half_gl2);
  CHECK(bad2.axiom_i);
  CHECK_FALSE(bad2.axiom_ii);
  CHECK_FALSE(bad2.ok);
}

TEST_CASE("structural defects are rejected outright") {
  CHECK_THROWS_AS(validate(RootDatum{2, {{1, -1}}, {}}), invalid_input);
  CHECK_THROWS_AS(validate(RootDatum{2, {{0, 0}}, {{1, -1}}}), invalid_input);
  CHECK_THROWS_AS(validate(RootDatum{2, {{1, -1}, {1, -1}}, {{1, -1}, {-1, 1}}}),
                  invalid_input);
  CHECK_THROWS_AS(validate(RootDatum{2, {{1}}, {{1, -1}}}), invalid_input);
  CHECK_THROWS_AS(weyl_group(RootDatum{1, {{1}}, {{1}}}), invalid_input);
}

TEST_CASE("reflections are involutions") {
  auto rd = gl_datum(4);
  auto id = weyl_group(RootDatum{4, {}, {}}).front();
  for (size_t i = 0; i < rd.roots.size(); ++i) {
    auto s = reflection_matrix(rd, static_cast<int>(i));
    IntMatrix sq(4, IntVec(4, 0));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) sq[a][b] += s[a][c] * s[c][b];
    CHECK(sq == id);
  }
}

TEST_CASE("reflection closures have factorial order") {
  CHECK(weyl_group(gl_datum(1)).size() == 1);
  CHECK(weyl_group(gl_datum(2)).size() == 2);
  CHECK(weyl_group(gl_datum(3)).size() == 6);
  CHECK(weyl_group(gl_datum(4)).size() == 24);
  CHECK(weyl_group(gl_datum(5)).size() == 120);
  CHECK(weyl_group(sl_datum(3)).size() == 6);
}

TEST_CASE("the closure is a group") {
  auto w = weyl_group(gl_datum(3));
  std::set<IntMatrix> members(w.begin(), w.end());
  for (const auto& a : w)
    for (const auto& b : w) {
      IntMatrix ab(3, IntVec(3, 0));
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
          for (int j = 0; j < 3; ++j) ab[i][j] += a[i][k] * b[k][j];
      CHECK(members.count(ab) == 1);
    }
  IntMatrix id(3, IntVec(3, 0));
  for (int i = 0; i < 3; ++i) id[i][i] = 1;
  CHECK(members.count(id) == 1);
}

TEST_CASE("sum zero presentation of the special linear datum") {
  auto rd = sl_datum(2);
  CHECK(rd.rank == 1);
  auto sorted_roots = rd.roots;
  std::sort(sorted_roots.begin(), sorted_roots.end());
  CHECK(sorted_roots == std::vector<IntVec>{{-1}, {1}});
  auto sorted_coroots = rd.coroots;
  std::sort(sorted_coroots.begin(), sorted_coroots.end());
  CHECK(sorted_coroots == std::vector<IntVec>{{-2}, {2}});
  CHECK(validate(rd).ok);
  CHECK(weyl_group(rd).size() == 2);

  for (int n = 2; n <= 5; ++n) CHECK(validate(sl_datum(n)).ok);
  CHECK(validate(sl_datum(1)).ok);
  CHECK(weyl_group(sl_datum(4)).size() == 24);
}

TEST_CASE("tight bounds stop the closure") {
  CHECK_THROWS_AS(weyl_group(gl_datum(3), 3), size_limit_error);
  CHECK(weyl_group(gl_datum(3), 6).size() == 6);
}
