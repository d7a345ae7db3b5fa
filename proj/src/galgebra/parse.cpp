#include "dmod/parse.hpp"

#include <cctype>
#include <string>

#include "dmod/errors.hpp"

namespace dmod {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const AlgebraPtr& alg) : s_(text), alg_(alg) {}

  Poly run() {
    skip();
    if (pos_ >= s_.size()) fail("expected an expression");
    Poly p = expr();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural number");
    return std::string(s_.substr(start, pos_ - start));
  }

  unsigned exponent() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '(') fail("parentheses are not allowed in exponents");
    std::string d = digits();
    if (d.size() > 5) fail("exponent too large");
    return static_cast<unsigned>(std::stoul(d));
  }

  Poly expr() {
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    Poly acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc = star_mul(acc, factor());
    return acc;
  }

  Poly factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(digits());
      Integer den = 1;
      if (accept('/')) {
        den = Integer(digits());
        if (den == 0) fail("zero denominator");
      }
      return Poly::constant(alg_, make_rational(num, den));
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      if (accept('^')) inner = pow(inner, exponent());
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      int idx = alg_->index_of(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      unsigned e = 1;
      if (accept('^')) e = exponent();
      return Poly::monomial(alg_, Monomial::variable(idx, static_cast<int>(e)));
    }
    fail("expected a coefficient, variable or '('");
  }

  std::string_view s_;
  const AlgebraPtr& alg_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_element(std::string_view text, const AlgebraPtr& alg) { return Parser(text, alg).run(); }

}  // namespace dmod
