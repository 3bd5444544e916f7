#include "qchn/laurent.hpp"

#include <sstream>
#include <vector>

namespace qchn {

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (constant != 0) terms_[0] = constant;
}

LaurentPoly LaurentPoly::term(int exponent, const Rational& coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[exponent] = coeff;
  return p;
}

LaurentPoly LaurentPoly::q() { return term(1, 1); }
LaurentPoly LaurentPoly::one() { return term(0, 1); }

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int LaurentPoly::min_exp() const { return terms_.begin()->first; }
int LaurentPoly::max_exp() const { return terms_.rbegin()->first; }

Rational LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::leading_coeff() const { return terms_.rbegin()->second; }

void LaurentPoly::add_term(int exponent, const Rational& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    terms_[exponent] = coeff;
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
  if (shift == 0) return *this;
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e + shift] = c;
  return r;
}

Rational LaurentPoly::eval(const Rational& q0) const {
  if (terms_.empty()) return Rational(0);
  if (q0 == 0 && min_exp() < 0)
    throw arithmetic_error("Laurent polynomial evaluated at q = 0");
  // Horner over the exponent range [min, max].
  const int lo = min_exp(), hi = max_exp();
  Rational acc(0);
  for (int e = hi; e >= lo; --e) {
    acc *= q0;
    acc += coeff(e);
  }
  if (lo != 0) {
    Rational base = lo > 0 ? q0 : Rational(1) / q0;
    Rational pow(1);
    for (int i = 0; i < (lo > 0 ? lo : -lo); ++i) pow *= base;
    acc *= pow;
  }
  return acc;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest exponent first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    Rational c = it->second;
    const bool neg = c < 0;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    if (neg) c = -c;
    if (e == 0) {
      out << rational_to_string(c);
    } else {
      if (c != 1) out << rational_to_string(c) << "*";
      out << "q";
      if (e != 1) out << "^" << e;
    }
    first = false;
  }
  return out.str();
}

namespace {

// Dense coefficient vector c[0..deg] for an ordinary polynomial.
std::vector<Rational> to_dense(const LaurentPoly& p) {
  std::vector<Rational> c(static_cast<size_t>(p.max_exp()) + 1, Rational(0));
  for (const auto& [e, k] : p.terms()) c[static_cast<size_t>(e)] = k;
  return c;
}

LaurentPoly from_dense(const std::vector<Rational>& c) {
  LaurentPoly p;
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) p.add_term(static_cast<int>(i), c[i]);
  return p;
}

size_t degree_of(const std::vector<Rational>& c) {
  size_t d = c.size();
  while (d > 0 && c[d - 1] == 0) --d;
  return d;  // number of meaningful coefficients; 0 means zero polynomial
}

// In-place a -= amounts of b so that deg(a) < deg(b); b must be nonzero.
void remainder(std::vector<Rational>& a, const std::vector<Rational>& b) {
  size_t db = degree_of(b);
  for (size_t da = degree_of(a); da >= db && da > 0; da = degree_of(a)) {
    Rational f = a[da - 1] / b[db - 1];
    size_t shift = da - db;
    for (size_t i = 0; i < db; ++i) a[i + shift] -= f * b[i];
    a[da - 1] = 0;  // cancel exactly
  }
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (!a.is_zero() && a.min_exp() < 0)
    throw invalid_argument_error("poly_gcd on a Laurent polynomial");
  if (!b.is_zero() && b.min_exp() < 0)
    throw invalid_argument_error("poly_gcd on a Laurent polynomial");
  if (a.is_zero() && b.is_zero()) return LaurentPoly();
  std::vector<Rational> x = a.is_zero() ? std::vector<Rational>{} : to_dense(a);
  std::vector<Rational> y = b.is_zero() ? std::vector<Rational>{} : to_dense(b);
  while (degree_of(y) > 0) {
    remainder(x, y);
    x.swap(y);
  }
  LaurentPoly g = from_dense(x);
  // Monic normalization makes the gcd unique.
  return g * (Rational(1) / g.leading_coeff());
}

LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw arithmetic_error("exact division by zero polynomial");
  if (a.is_zero()) return LaurentPoly();
  // Allow Laurent inputs by clearing the q-power first.
  int sa = a.min_exp(), sb = b.min_exp();
  std::vector<Rational> x = to_dense(a.shifted(-sa));
  std::vector<Rational> y = to_dense(b.shifted(-sb));
  size_t db = degree_of(y);
  std::vector<Rational> quot(x.size(), Rational(0));
  for (size_t da = degree_of(x); da >= db && da > 0; da = degree_of(x)) {
    Rational f = x[da - 1] / y[db - 1];
    size_t shift = da - db;
    quot[shift] = f;
    for (size_t i = 0; i < db; ++i) x[i + shift] -= f * y[i];
    x[da - 1] = 0;
  }
  if (degree_of(x) != 0)
    throw arithmetic_error("polynomial division is not exact");
  return from_dense(quot).shifted(sa - sb);
}

}  // namespace qchn
