// Laurent polynomials in q with exact rational coefficients.
#pragma once

#include <map>
#include <string>

#include "qchn/rational.hpp"

namespace qchn {

// Sparse exponent -> coefficient map; no stored coefficient is zero,
// so the zero polynomial is the empty map. Exponents may be negative.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& constant);

  static LaurentPoly term(int exponent, const Rational& coeff);
  static LaurentPoly q();   // the variable itself
  static LaurentPoly one();

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;

  // Degree bounds; only valid on nonzero polynomials.
  int min_exp() const;
  int max_exp() const;

  Rational coeff(int exponent) const;
  Rational leading_coeff() const;  // coefficient of max_exp()
  const std::map<int, Rational>& terms() const { return terms_; }

  void add_term(int exponent, const Rational& coeff);  // accumulates, drops zeros

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Rational& c) const;

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Multiply by q^shift.
  LaurentPoly shifted(int shift) const;

  // Exact evaluation; q0 must be nonzero when min_exp() < 0.
  Rational eval(const Rational& q0) const;

  // Human-readable canonical form, exponents descending, e.g. "q^2 - 2 + q^-2".
  std::string str() const;

 private:
  std::map<int, Rational> terms_;
};

// Monic gcd of two ordinary polynomials (min_exp >= 0 required).
// gcd(0, b) = monic(b); gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Exact division; throws if not divisible or divisor is zero.
LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace qchn
