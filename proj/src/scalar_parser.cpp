#include "qchn/scalar_parser.hpp"

#include <cctype>

namespace qchn {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text), pos_(0) {}

  ScalarQ run() {
    ScalarQ v = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw parse_error("unexpected trailing input", pos_);
    return v;
  }

 private:
  const std::string& text_;
  std::size_t pos_;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c))
      throw parse_error(std::string("expected '") + c + "'", pos_);
  }

  ScalarQ expr() {
    ScalarQ v = term();
    for (;;) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  ScalarQ term() {
    ScalarQ v = factor();
    for (;;) {
      if (accept('*')) {
        v *= factor();
      } else if (accept('/')) {
        ScalarQ d = factor();
        if (d.is_zero()) throw arithmetic_error("division by zero in scalar expression");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  ScalarQ factor() {
    if (accept('-')) return -factor();
    return power();
  }

  ScalarQ power() {
    ScalarQ base = primary();
    if (!accept('^')) return base;
    long e = exponent_literal();
    ScalarQ v = ScalarQ::one();
    ScalarQ b = base;
    long n = e;
    if (n < 0) {
      if (base.is_zero()) throw arithmetic_error("zero raised to a negative power");
      b = base.inverse();
      n = -n;
    }
    for (long i = 0; i < n; ++i) v *= b;
    return v;
  }

  // INTEGER | '-' INTEGER | '(' ['-'] INTEGER ')'
  long exponent_literal() {
    skip_ws();
    std::size_t at = pos_;
    bool parens = accept('(');
    bool neg = accept('-');
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw parse_error("exponent is not an integer literal", at);
    long value = integer();
    if (parens) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        throw parse_error("exponent is not an integer literal", at);
      ++pos_;
    }
    return neg ? -value : value;
  }

  ScalarQ primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw parse_error("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ScalarQ v = expr();
      expect(')');
      return v;
    }
    if (c == 'q') {
      ++pos_;
      return ScalarQ::q_power(1);
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return ScalarQ(Rational(integer()));
    throw parse_error("expected integer, 'q' or '('", pos_);
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw parse_error("expected integer literal", pos_);
    return std::stol(text_.substr(start, pos_ - start));
  }
};

}  // namespace

ScalarQ parse_scalar(const std::string& text) { return Parser(text).run(); }

}  // namespace qchn
