#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tropbun {

// Exact rational scalar. All geometry (lengths, offsets, Jacobian coordinates,
// cocycle constants) is Rat; chip counts and slopes are Int.
using Rat = mpq_class;
using Int = long long;

Rat rat(long num, long den = 1);

inline Rat rat_of(Int v) { return Rat(static_cast<long>(v)); }

// Accepts "p/q" or a bare integer "p"; q must be nonzero. Normalizes sign and gcd.
Rat parse_rat(const std::string& s);

// Canonical form "p/q" with q >= 1 and gcd(|p|, q) = 1; integers print as "p/1".
std::string rat_str(const Rat& r);

// lcm of the denominators of `values` (>= 1; 1 for an empty list).
mpz_class denominator_lcm(const std::vector<Rat>& values);

// Representative of x mod m in [0, m); requires m > 0.
Rat rat_mod(const Rat& x, const Rat& m);

// floor(x / m) as an exact integer; requires m > 0 and the result to fit Int.
Int rat_floor_div(const Rat& x, const Rat& m);

// Exact conversion helpers; throw internal_error when the value does not fit.
Int to_int(const mpz_class& z);
bool is_integer(const Rat& r);

}  // namespace tropbun
