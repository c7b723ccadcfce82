#include "icoq/rational.hpp"

#include <cctype>

namespace icoq {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) fail("DivisionByZero", "rational with denominator 0");
  v_ = BigRat(num);
  v_ /= BigRat(den);
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail("DivisionByZero", "rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e < 0) {
    if (is_zero()) fail("DivisionByZero", "0 raised to a negative power");
    return (Rational(1) / *this).pow(-e);
  }
  Rational acc(1), base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Rational Rational::parse(const std::string& text) {
  size_t i = 0, n = text.size();
  auto skip = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto integer = [&](const char* what) -> BigInt {
    skip();
    bool neg = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
    skip();
    if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
      fail("SyntaxError", std::string("expected ") + what + " in rational literal '" + text + "'");
    BigInt v = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      ++i;
    }
    return neg ? BigInt(-v) : v;
  };

  BigInt num = integer("numerator");
  skip();
  BigInt den = 1;
  if (i < n && text[i] == '/') {
    ++i;
    den = integer("denominator");
  }
  skip();
  if (i != n) fail("SyntaxError", "trailing characters in rational literal '" + text + "'");
  return Rational(num, den);
}

std::string Rational::str() const {
  std::string s = numerator().str();
  if (!is_integer()) s += "/" + denominator().str();
  return s;
}

}  // namespace icoq
