#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hankelforge {

// Exact arbitrary-precision integers and rationals. All arithmetic in the
// library is exact; there is no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// C(n, k) for k >= 0; n may be negative (standard polynomial extension).
inline Int binomial(const Int& n, unsigned long k) {
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

inline int neg_one_pow(long e) { return e % 2 == 0 ? 1 : -1; }

// (-1)^C(n,2), the sign of the order-n anti-diagonal permutation.
inline int binom2_sign(long n) { return neg_one_pow(n * (n - 1) / 2); }

inline Rat rat_pow(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  Rat b = base;
  if (exp < 0) {
    if (b == 0) throw std::domain_error("rat_pow: zero base, negative exponent");
    b = 1 / b;
    exp = -exp;
  }
  Rat acc(1);
  while (exp > 0) {
    if (exp & 1) acc *= b;
    b *= b;
    exp >>= 1;
  }
  return acc;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// "p" for integers, "p/q" otherwise -- the wire format for exact values.
inline std::string to_string(const Rat& r) { return r.get_str(); }

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (s.empty() || r.set_str(s, 10) != 0)
    throw std::invalid_argument("not a rational: '" + s + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace hankelforge
