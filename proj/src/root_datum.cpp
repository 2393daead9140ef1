#include "tropbun/root_datum.hpp"

#include <algorithm>
#include <set>

#include "tropbun/errors.hpp"

namespace tropbun {

namespace {

void check_shape(const RootDatum& rd) {
  require(rd.rank >= 0, "rank must be nonnegative");
  require(rd.roots.size() == rd.coroots.size(),
          "roots and coroots must match up by index");
  for (const auto* side : {&rd.roots, &rd.coroots}) {
    for (const IntVec& v : *side) {
      require(static_cast<int>(v.size()) == rd.rank, "vector length must equal the rank");
      require(std::any_of(v.begin(), v.end(), [](Int x) { return x != 0; }),
              "zero vectors are not allowed");
    }
    auto sorted = *side;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            "duplicate vectors are not allowed");
  }
}

Int pair(const IntVec& u, const IntVec& v) {
  Int s = 0;
  for (size_t k = 0; k < u.size(); ++k) s += u[k] * v[k];
  return s;
}

IntVec reflect(const IntVec& u, const IntVec& alpha, const IntVec& coalpha) {
  Int c = pair(u, coalpha);
  IntVec out = u;
  for (size_t k = 0; k < out.size(); ++k) out[k] -= c * alpha[k];
  return out;
}

bool same_set(std::vector<IntVec> a, std::vector<IntVec> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

IntMatrix identity_matrix(int r) {
  IntMatrix m(r, IntVec(r, 0));
  for (int i = 0; i < r; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  int r = static_cast<int>(a.size());
  IntMatrix out(r, IntVec(r, 0));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < r; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

}  // namespace

RootDatumReport validate(const RootDatum& rd) {
  check_shape(rd);
  RootDatumReport report;
  report.axiom_i = true;
  for (size_t i = 0; i < rd.roots.size(); ++i)
    if (pair(rd.roots[i], rd.coroots[i]) != 2) report.axiom_i = false;

  report.axiom_ii = true;
  for (size_t i = 0; i < rd.roots.size(); ++i) {
    std::vector<IntVec> r_img, c_img;
    for (const IntVec& u : rd.roots) r_img.push_back(reflect(u, rd.roots[i], rd.coroots[i]));
    for (const IntVec& v : rd.coroots) c_img.push_back(reflect(v, rd.coroots[i], rd.roots[i]));
    if (!same_set(std::move(r_img), rd.roots) || !same_set(std::move(c_img), rd.coroots))
      report.axiom_ii = false;
  }

  report.ok = report.axiom_i && report.axiom_ii;
  return report;
}

IntMatrix reflection_matrix(const RootDatum& rd, int i) {
  require(i >= 0 && i < static_cast<int>(rd.roots.size()), "root index out of range");
  IntMatrix m = identity_matrix(rd.rank);
  for (int j = 0; j < rd.rank; ++j)
    for (int k = 0; k < rd.rank; ++k) m[j][k] -= rd.roots[i][j] * rd.coroots[i][k];
  return m;
}

std::vector<IntMatrix> weyl_group(const RootDatum& rd, long bound) {
  require(validate(rd).ok, "weyl group needs a valid root datum");
  std::vector<IntMatrix> generators;
  generators.reserve(rd.roots.size());
  for (size_t i = 0; i < rd.roots.size(); ++i)
    generators.push_back(reflection_matrix(rd, static_cast<int>(i)));

  std::set<IntMatrix> seen;
  std::vector<IntMatrix> frontier{identity_matrix(rd.rank)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<IntMatrix> next;
    for (const IntMatrix& w : frontier)
      for (const IntMatrix& s : generators) {
        IntMatrix ws = multiply(w, s);
        if (!seen.insert(ws).second) continue;
        if (static_cast<long>(seen.size()) > bound)
          throw size_limit_error("reflection closure exceeded the bound");
        next.push_back(std::move(ws));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

RootDatum gl_datum(int n) {
  require(n >= 1, "rank must be at least one");
  RootDatum rd;
  rd.rank = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      IntVec v(n, 0);
      v[i] = 1;
      v[j] = -1;
      rd.roots.push_back(v);
      rd.coroots.push_back(v);
    }
  return rd;
}

RootDatum sl_datum(int n) {
  require(n >= 1, "rank must be at least one");
  RootDatum rd;
  rd.rank = n - 1;
  // ebar_m = fdual_m - fdual_{m-1}, the image of e_m in the quotient dual.
  auto ebar = [&](int m) {
    IntVec v(n - 1, 0);
    if (m < n - 1) v[m] += 1;
    if (m > 0) v[m - 1] -= 1;
    return v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      IntVec root(n - 1, 0);
      for (int k = std::min(i, j); k < std::max(i, j); ++k) root[k] = i < j ? 1 : -1;
      IntVec co = ebar(i);
      IntVec cj = ebar(j);
      for (int k = 0; k < n - 1; ++k) co[k] -= cj[k];
      rd.roots.push_back(std::move(root));
      rd.coroots.push_back(std::move(co));
    }
  return rd;
}

}  // namespace tropbun
