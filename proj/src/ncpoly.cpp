#include "qchn/ncpoly.hpp"

#include <algorithm>
#include <sstream>

namespace qchn {

NCPoly NCPoly::constant(const ScalarQ& c) {
  NCPoly p;
  p.add_term(NCMonomial{}, c);
  return p;
}

NCPoly NCPoly::generator(GenLetter g) {
  NCPoly p;
  p.add_term(NCMonomial{{g}}, ScalarQ::one());
  return p;
}

NCPoly NCPoly::monomial(NCMonomial m, const ScalarQ& c) {
  NCPoly p;
  p.add_term(m, c);
  return p;
}

void NCPoly::add_term(const NCMonomial& m, const ScalarQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly NCPoly::operator-() const {
  NCPoly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  NCPoly r = *this;
  r += o;
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
  NCPoly r = *this;
  r -= o;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
  NCPoly r;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      NCMonomial m;
      m.word.reserve(m1.word.size() + m2.word.size());
      m.word.insert(m.word.end(), m1.word.begin(), m1.word.end());
      m.word.insert(m.word.end(), m2.word.begin(), m2.word.end());
      r.add_term(m, c1 * c2);
    }
  }
  return r;
}

NCPoly operator*(const ScalarQ& c, const NCPoly& p) {
  NCPoly r;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : p.terms()) r.add_term(m, c * v);
  return r;
}

bool NCPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const std::size_t d = terms_.begin()->first.word.size();
  for (const auto& [m, c] : terms_)
    if (m.word.size() != d) return false;
  return true;
}

int NCPoly::degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

NCPoly NCPoly::abelianized() const {
  NCPoly r;
  for (const auto& [m, c] : terms_) {
    NCMonomial sorted = m;
    std::sort(sorted.word.begin(), sorted.word.end());
    r.add_term(sorted, c);
  }
  return r;
}

std::map<NCMonomial, Rational> NCPoly::specialize(const Rational& q0) const {
  std::map<NCMonomial, Rational> r;
  for (const auto& [m, c] : terms_) {
    Rational v = c.eval_at(q0);
    if (v != 0) r.emplace(m, std::move(v));
  }
  return r;
}

std::string NCPoly::str(int n) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    out << "(" << c.str() << ")";
    for (GenLetter g : m.word)
      out << "*T[" << (g / n) + 1 << "," << (g % n) + 1 << "]";
    first = false;
  }
  return out.str();
}

}  // namespace qchn
