#include "qchn/rational.hpp"

namespace qchn {

Rational rational_from_string(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0)
    throw invalid_argument_error("bad rational literal: '" + text + "'");
  if (r.get_den() == 0)
    throw arithmetic_error("rational with zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) {
  return r.get_str();
}

}  // namespace qchn
