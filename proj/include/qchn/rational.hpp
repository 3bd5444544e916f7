// Arbitrary-precision exact rationals (GMP-backed).
#pragma once

#include <gmpxx.h>

#include <string>

#include "qchn/errors.hpp"

namespace qchn {

using Integer = mpz_class;

// Always kept in canonical form: gcd(|num|, den) = 1, den >= 1.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw arithmetic_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "p/q", with optional sign.
Rational rational_from_string(const std::string& text);

// "p" when den == 1, else "p/q".
std::string rational_to_string(const Rational& r);

}  // namespace qchn
