#pragma once

#include <gmpxx.h>

#include <string>

namespace tgw {

// Exact coefficient field. mpq_class(n, d) is not reduced; use make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace tgw
