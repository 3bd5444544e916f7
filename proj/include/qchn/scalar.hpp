// ScalarQ: the coefficient field Q(q), exact rational functions of q.
#pragma once

#include <string>

#include "qchn/laurent.hpp"

namespace qchn {

// Canonical form (unique, so equality is structural):
//   - den has min exponent 0, nonzero constant term, leading coefficient 1;
//   - writing num = q^s * N with N(0) != 0, gcd(N, den) = 1;
//   - zero is num = 0, den = 1.
class ScalarQ {
 public:
  ScalarQ() : num_(), den_(LaurentPoly::one()) {}                 // zero
  explicit ScalarQ(const Rational& constant);
  explicit ScalarQ(long constant);
  ScalarQ(const LaurentPoly& num, const LaurentPoly& den);        // canonicalizes

  static ScalarQ zero() { return ScalarQ(); }
  static ScalarQ one();
  static ScalarQ q_power(int k);  // q^k

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }  // denominator 1

  ScalarQ operator-() const;
  ScalarQ operator+(const ScalarQ& o) const;
  ScalarQ operator-(const ScalarQ& o) const;
  ScalarQ operator*(const ScalarQ& o) const;
  ScalarQ operator/(const ScalarQ& o) const;  // throws arithmetic_error on /0
  ScalarQ& operator+=(const ScalarQ& o) { return *this = *this + o; }
  ScalarQ& operator-=(const ScalarQ& o) { return *this = *this - o; }
  ScalarQ& operator*=(const ScalarQ& o) { return *this = *this * o; }

  ScalarQ inverse() const;

  bool operator==(const ScalarQ& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const ScalarQ& o) const { return !(*this == o); }

  // Exact specialization at q = q0. Throws arithmetic_error when q0 = 0 or
  // when the denominator vanishes at q0 (the message names the denominator).
  Rational eval_at(const Rational& q0) const;

  std::string str() const;

 private:
  LaurentPoly num_;
  LaurentPoly den_;

  void canonicalize();
};

// The q-integer k_q = q^{k-1} + q^{k-3} + ... + q^{1-k}; requires k >= 0.
// Built as the explicit sum, so the denominator is always 1.
ScalarQ qnum(int k);

}  // namespace qchn
