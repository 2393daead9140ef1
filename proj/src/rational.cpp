#include "tropbun/rational.hpp"

#include <cctype>

#include "tropbun/errors.hpp"

namespace tropbun {

Rat rat(long num, long den) {
  require(den != 0, "rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_valid_int_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& s) {
  std::string num = s, den = "1";
  if (auto pos = s.find('/'); pos != std::string::npos) {
    num = s.substr(0, pos);
    den = s.substr(pos + 1);
  }
  require(is_valid_int_token(num) && is_valid_int_token(den),
          "malformed rational '" + s + "'");
  mpz_class n(num), d(den);
  require(d != 0, "rational with zero denominator '" + s + "'");
  Rat r(n);
  r /= Rat(d);
  return r;
}

std::string rat_str(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

mpz_class denominator_lcm(const std::vector<Rat>& values) {
  mpz_class l = 1;
  for (const Rat& v : values) {
    mpz_class g;
    mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    l = g;
  }
  return l;
}

Rat rat_mod(const Rat& x, const Rat& m) {
  check_internal(m > 0, "rat_mod with nonpositive modulus");
  // x - floor(x/m) * m
  mpz_class q;
  mpz_class a = x.get_num() * m.get_den();
  mpz_class b = x.get_den() * m.get_num();
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Rat r = x - Rat(q) * m;
  check_internal(r >= 0 && r < m, "rat_mod out of range");
  return r;
}

Int rat_floor_div(const Rat& x, const Rat& m) {
  check_internal(m > 0, "rat_floor_div with nonpositive modulus");
  mpz_class q;
  mpz_class a = x.get_num() * m.get_den();
  mpz_class b = x.get_den() * m.get_num();
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return to_int(q);
}

Int to_int(const mpz_class& z) {
  check_internal(z.fits_slong_p(), "integer out of machine range");
  return static_cast<Int>(z.get_si());
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace tropbun
