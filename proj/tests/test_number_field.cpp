#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <complex>
#include <random>

#include "doctest.h"
#include "icoq/number_field.hpp"

using namespace icoq;

namespace {

NFElem rand_elem(const FieldPtr& f, std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  std::vector<Rational> coords;
  for (int i = 0; i < f->degree(); ++i)
    coords.emplace_back(BigInt(num(rng)), BigInt(den(rng)));
  return NFElem(f, std::move(coords));
}

}  // namespace

TEST_CASE("reducible or non-monic minimal polynomials are rejected") {
  CHECK_THROWS_AS(NumberField::make({-4, 0, 1}, "u"), Error);  // t^2 - 4 = (t-2)(t+2)
  CHECK_THROWS_AS(NumberField::make({1, 2, 1}, "u"), Error);   // (t+1)^2
  CHECK_THROWS_AS(NumberField::make({-5, 0, 2}, "u"), Error);  // not monic
  try {
    NumberField::make({-4, 0, 1}, "u");
  } catch (const Error& e) {
    CHECK(e.code() == "ReduciblePolynomial");
  }
}

TEST_CASE("degree bound is enforced") {
  // t^5 - 2 is irreducible but of degree 5
  CHECK_THROWS_AS(NumberField::make({-2, 0, 0, 0, 0, 1}, "u"), Error);
}

TEST_CASE("field axioms in the quadratic, cubic, and quartic fields") {
  std::mt19937 rng(31415);
  for (const FieldPtr& f : {field_sqrt5(), field_cbrt(5), field_zeta5()}) {
    for (int i = 0; i < 60; ++i) {
      NFElem a = rand_elem(f, rng), b = rand_elem(f, rng), c = rand_elem(f, rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      if (!a.is_zero()) CHECK(a * a.inverse() == NFElem::from_int(f, 1));
    }
  }
}

TEST_CASE("the generator satisfies its minimal polynomial") {
  FieldPtr f = field_cbrt(5);
  NFElem t = NFElem::gen(f);
  CHECK(t.pow(3) == NFElem::from_int(f, 5));
  FieldPtr z = field_zeta5();
  NFElem zeta = NFElem::gen(z);
  CHECK(zeta.pow(5) == NFElem::from_int(z, 1));
  CHECK(zeta.pow(4) + zeta.pow(3) + zeta.pow(2) + zeta + NFElem::from_int(z, 1) ==
        NFElem(z));
}

TEST_CASE("sqrt5 inside the cyclotomic field") {
  FieldPtr z = field_zeta5();
  NFElem s = sqrt5_in_zeta5(z);
  CHECK(s * s == NFElem::from_int(z, 5));
  // the chosen square root is the positive one under the first embedding
  CHECK(s.embed(0).real() > 0);
}

TEST_CASE("mixed-field arithmetic is rejected") {
  NFElem a = NFElem::gen(field_sqrt5());
  NFElem b = NFElem::gen(field_zeta5());
  CHECK_THROWS_AS(a + b, Error);
  try {
    NFElem c = a * b;
    (void)c;
  } catch (const Error& e) {
    CHECK(e.code() == "FieldMismatch");
  }
}

TEST_CASE("inverse of zero throws DivisionByZero") {
  FieldPtr f = field_sqrt5();
  CHECK_THROWS_AS(NFElem(f).inverse(), Error);
  try {
    NFElem(f).inverse();
  } catch (const Error& e) {
    CHECK(e.code() == "DivisionByZero");
  }
}

TEST_CASE("rational detection") {
  FieldPtr f = field_cbrt(10);
  NFElem t = NFElem::gen(f);
  NFElem r = t * t * t;  // = 10
  CHECK(r.is_rational());
  CHECK(r.rational_part() == Rational(10));
  CHECK(!t.is_rational());
}

TEST_CASE("printing and parsing round-trip") {
  std::mt19937 rng(777);
  for (const FieldPtr& f : {field_sqrt5(), field_cbrt(5), field_zeta5()}) {
    for (int i = 0; i < 60; ++i) {
      NFElem a = rand_elem(f, rng);
      CHECK(NFElem::parse(f, a.str()) == a);
    }
  }
  FieldPtr c5 = field_cbrt(5);
  CHECK(NFElem::parse(c5, "-3/20*t^2") ==
        NFElem(c5, {Rational(0), Rational(0), Rational(BigInt(-3), BigInt(20))}));
  CHECK_THROWS_AS(NFElem::parse(c5, "3*q"), Error);
}

TEST_CASE("embeddings are ordered real-descending then imaginary-descending") {
  FieldPtr f = field_sqrt5();
  NFElem t = NFElem::gen(f);
  // first root is +sqrt5, second -sqrt5
  CHECK(t.embed(0).real() == doctest::Approx(2.2360679));
  CHECK(t.embed(1).real() == doctest::Approx(-2.2360679));
  CHECK_THROWS_AS(t.embed(2), Error);

  FieldPtr c5 = field_cbrt(5);
  NFElem u = NFElem::gen(c5);
  CHECK(u.embed(0).real() == doctest::Approx(std::cbrt(5.0)));
  CHECK(u.embed(0).imag() == doctest::Approx(0.0));
  // the two complex embeddings are conjugate, larger imaginary part first
  CHECK(u.embed(1).imag() > 0);
  CHECK(u.embed(2).imag() < 0);
}
