#include "qchn/scalar.hpp"

#include <sstream>

namespace qchn {

ScalarQ::ScalarQ(const Rational& constant)
    : num_(constant), den_(LaurentPoly::one()) {}

ScalarQ::ScalarQ(long constant)
    : num_(Rational(constant)), den_(LaurentPoly::one()) {}

ScalarQ::ScalarQ(const LaurentPoly& num, const LaurentPoly& den)
    : num_(num), den_(den) {
  if (den_.is_zero()) throw arithmetic_error("scalar with zero denominator");
  canonicalize();
}

ScalarQ ScalarQ::one() { return ScalarQ(1); }

ScalarQ ScalarQ::q_power(int k) {
  ScalarQ s;
  s.num_ = LaurentPoly::term(k, 1);
  s.den_ = LaurentPoly::one();
  return s;
}

void ScalarQ::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::one();
    return;
  }
  // Pull the q-powers out of both parts: num = q^sn * N, den = q^sd * D
  // with N(0) != 0, D(0) != 0; the value is q^(sn-sd) * N / D.
  const int sn = num_.min_exp();
  const int sd = den_.min_exp();
  LaurentPoly n = num_.shifted(-sn);
  LaurentPoly d = den_.shifted(-sd);
  LaurentPoly g = poly_gcd(n, d);
  if (!g.is_one()) {
    n = poly_div_exact(n, g);
    d = poly_div_exact(d, g);
  }
  const Rational lead = d.leading_coeff();
  if (lead != 1) {
    Rational inv = Rational(1) / lead;
    n = n * inv;
    d = d * inv;
  }
  num_ = n.shifted(sn - sd);
  den_ = d;
}

ScalarQ ScalarQ::operator-() const {
  ScalarQ r = *this;
  r.num_ = -r.num_;
  return r;
}

ScalarQ ScalarQ::operator+(const ScalarQ& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    ScalarQ r;
    LaurentPoly n = num_ + o.num_;
    if (n.is_zero()) return r;
    r.num_ = std::move(n);
    r.den_ = den_;
    r.canonicalize();
    return r;
  }
  return ScalarQ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ScalarQ ScalarQ::operator-(const ScalarQ& o) const { return *this + (-o); }

ScalarQ ScalarQ::operator*(const ScalarQ& o) const {
  if (is_zero() || o.is_zero()) return ScalarQ();
  return ScalarQ(num_ * o.num_, den_ * o.den_);
}

ScalarQ ScalarQ::inverse() const {
  if (is_zero()) throw arithmetic_error("division by zero scalar");
  return ScalarQ(den_, num_);
}

ScalarQ ScalarQ::operator/(const ScalarQ& o) const {
  if (o.is_zero()) throw arithmetic_error("division by zero scalar");
  if (is_zero()) return ScalarQ();
  return ScalarQ(num_ * o.den_, den_ * o.num_);
}

Rational ScalarQ::eval_at(const Rational& q0) const {
  if (q0 == 0) throw arithmetic_error("scalar evaluated at q = 0");
  Rational d = den_.eval(q0);
  if (d == 0)
    throw arithmetic_error("pole at q = " + rational_to_string(q0) +
                           ": denominator " + den_.str() + " vanishes");
  return num_.eval(q0) / d;
}

std::string ScalarQ::str() const {
  if (den_.is_one()) return num_.str();
  std::ostringstream out;
  if (num_.terms().size() > 1)
    out << "(" << num_.str() << ")";
  else
    out << num_.str();
  out << "/(" << den_.str() << ")";
  return out.str();
}

ScalarQ qnum(int k) {
  if (k < 0) throw invalid_argument_error("qnum requires k >= 0");
  LaurentPoly p;
  for (int i = 0; i < k; ++i) p.add_term(k - 1 - 2 * i, 1);
  return ScalarQ(p, LaurentPoly::one());
}

}  // namespace qchn
