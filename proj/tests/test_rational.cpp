#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "icoq/rational.hpp"

using icoq::BigInt;
using icoq::Error;
using icoq::Rational;

namespace {

Rational rand_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

}  // namespace

TEST_CASE("construction normalizes to lowest terms") {
  CHECK(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(BigInt(-2), BigInt(4)) == Rational(BigInt(-1), BigInt(2)));
  CHECK(Rational(BigInt(2), BigInt(-4)) == Rational(BigInt(-1), BigInt(2)));
  CHECK(Rational(BigInt(0), BigInt(7)) == Rational(0));
  CHECK(Rational(BigInt(6), BigInt(3)).is_integer());
  CHECK(Rational(BigInt(7), BigInt(3)).denominator() == 3);
  CHECK(Rational(BigInt(-7), BigInt(3)).numerator() == -7);
}

TEST_CASE("zero denominator is rejected") {
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), Error);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 300; ++i) {
    Rational a = rand_rational(rng), b = rand_rational(rng), c = rand_rational(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Rational(0) == a);
    CHECK(a * Rational(1) == a);
    CHECK(a - a == Rational(0));
    if (a != Rational(0)) CHECK(a * (Rational(1) / a) == Rational(1));
  }
}

TEST_CASE("division rejects zero") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  try {
    Rational r = Rational(1) / Rational(0);
    (void)r;
  } catch (const Error& e) {
    CHECK(e.code() == "DivisionByZero");
  }
}

TEST_CASE("integer powers") {
  Rational half(BigInt(1), BigInt(2));
  CHECK(half.pow(3) == Rational(BigInt(1), BigInt(8)));
  CHECK(half.pow(0) == Rational(1));
  CHECK(half.pow(-2) == Rational(4));
  CHECK(Rational(-3).pow(3) == Rational(-27));
  CHECK_THROWS_AS(Rational(0).pow(-1), Error);
}

TEST_CASE("printing and parsing round-trip") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Rational a = rand_rational(rng);
    CHECK(Rational::parse(a.str()) == a);
  }
  CHECK(Rational::parse("-3/4") == Rational(BigInt(-3), BigInt(4)));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational(BigInt(5), BigInt(1)).str() == "5");
  CHECK(Rational(BigInt(-5), BigInt(2)).str() == "-5/2");
}

TEST_CASE("ordering is total and consistent with arithmetic") {
  std::mt19937 rng(99);
  for (int i = 0; i < 200; ++i) {
    Rational a = rand_rational(rng), b = rand_rational(rng);
    if (a < b) {
      CHECK(!(b < a));
      CHECK(b - a > Rational(0));
    } else if (b < a) {
      CHECK(a - b > Rational(0));
    } else {
      CHECK(a == b);
    }
  }
}

TEST_CASE("sign predicates and absolute value") {
  CHECK(Rational(-3).is_negative());
  CHECK(Rational(0).is_zero());
  CHECK(!Rational(BigInt(2), BigInt(7)).is_negative());
  CHECK(Rational(-3).abs() == Rational(3));
}

TEST_CASE("big values stay exact") {
  Rational big = Rational(10).pow(40) + Rational(1);
  CHECK(big - Rational(10).pow(40) == Rational(1));
  CHECK(big.str().size() == 41);
}
