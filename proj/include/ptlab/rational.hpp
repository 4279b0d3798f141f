#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ptlab {

using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

// base^exp for a possibly negative exponent; base must be nonzero when exp < 0.
inline Rational rational_pow(const Rational& base, int exp) {
  Rational result = 1;
  Rational factor = exp < 0 ? Rational(1) / base : base;
  for (int e = exp < 0 ? -exp : exp; e > 0; --e) result *= factor;
  return result;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace ptlab
