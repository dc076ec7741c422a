#pragma once

#include <gmpxx.h>

#include <string>

namespace jdv {

/// Arbitrary-precision exact rational. Weight sums over all degree pairs carry
/// denominators up to lcm(1..n-1), which leaves 64-bit range almost at once.
using Rational = mpq_class;
using BigInt = mpz_class;

/// "p/q" for non-integers, "p" for integers.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// num/den in canonical form. den must be nonzero.
inline Rational make_rational(long num, long den) {
  Rational r{BigInt(num), BigInt(den)};
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace jdv
