// Noncommutative polynomials in the generators of a quantum matrix algebra.
//
// A generator letter encodes T^i_j (or L^i_j) as (i-1)*n + (j-1), i.e. the
// row-major rank of the index pair. Monomials are words of letters; the
// monomial order is degree first, then lexicographic on the letters.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qchn/scalar.hpp"

namespace qchn {

using GenLetter = std::uint16_t;

struct NCMonomial {
  std::vector<GenLetter> word;

  int degree() const { return static_cast<int>(word.size()); }

  friend bool operator==(const NCMonomial& a, const NCMonomial& b) = default;
  friend bool operator<(const NCMonomial& a, const NCMonomial& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  }
};

class NCPoly {
 public:
  NCPoly() = default;

  static NCPoly one() { return constant(ScalarQ::one()); }
  static NCPoly constant(const ScalarQ& c);
  static NCPoly generator(GenLetter g);
  static NCPoly monomial(NCMonomial m, const ScalarQ& c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<NCMonomial, ScalarQ>& terms() const { return terms_; }

  void add_term(const NCMonomial& m, const ScalarQ& c);

  NCPoly operator-() const;
  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly operator*(const NCPoly& o) const;  // word concatenation
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);

  friend NCPoly operator*(const ScalarQ& c, const NCPoly& p);

  bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const NCPoly& o) const { return !(*this == o); }

  // All monomials of equal length; the zero polynomial is homogeneous of
  // every degree.
  bool is_homogeneous() const;
  int degree() const;  // max word length; -1 for zero

  // Letters sorted within each word; the image under "generators commute".
  NCPoly abelianized() const;

  // Coefficients evaluated at q0; throws on a pole. Zero terms dropped.
  std::map<NCMonomial, Rational> specialize(const Rational& q0) const;

  std::string str(int n) const;  // diagnostic form, letters as T[i,j]

 private:
  std::map<NCMonomial, ScalarQ> terms_;
};

}  // namespace qchn
