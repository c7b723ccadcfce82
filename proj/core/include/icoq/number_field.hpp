#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "icoq/rational.hpp"

namespace icoq {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Q[t]/(f) for a monic irreducible integer polynomial f of degree 1..4.
// Immutable; shared by every element of the field. Two descriptors are the
// same field iff the minimal polynomial and the symbol both agree.
class NumberField {
public:
  // minpoly lists coefficients c0..cn with cn == 1. Throws NotMonic /
  // ReduciblePolynomial on bad input. Degree must be between 1 and 4; the
  // irreducibility test is exact at those degrees (rational-root test plus,
  // for quartics, a bounded search for monic integer quadratic factors).
  static FieldPtr make(const std::vector<BigInt>& minpoly, const std::string& symbol);

  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  const std::string& symbol() const { return symbol_; }
  const std::vector<BigInt>& minpoly() const { return minpoly_; }

  // All complex roots of the minimal polynomial, sorted by descending real
  // part, ties by descending imaginary part. Computed once on first use.
  const std::vector<std::complex<double>>& roots() const;

  static bool same(const NumberField& a, const NumberField& b) {
    return a.symbol_ == b.symbol_ && a.minpoly_ == b.minpoly_;
  }

private:
  NumberField(std::vector<BigInt> minpoly, std::string symbol)
      : minpoly_(std::move(minpoly)), symbol_(std::move(symbol)) {}

  std::vector<BigInt> minpoly_;
  std::string symbol_;
  mutable std::vector<std::complex<double>> roots_;  // lazy cache
};

// Element of a NumberField, stored on the power basis 1, t, ..., t^(d-1).
class NFElem {
public:
  NFElem() = default;  // unusable placeholder; any operation on it throws
  explicit NFElem(FieldPtr field);  // zero
  NFElem(FieldPtr field, std::vector<Rational> coords);

  static NFElem from_rational(const FieldPtr& field, const Rational& r);
  static NFElem from_int(const FieldPtr& field, long long n) {
    return from_rational(field, Rational(n));
  }
  static NFElem gen(const FieldPtr& field);  // the class of t

  // Accepts the same additive grammar the printer emits, e.g. "1/2 + 3/2*t",
  // "-t^2 + 5", "0". The symbol must match the field's.
  static NFElem parse(const FieldPtr& field, const std::string& text);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  // True when the element lies in the prime field (all higher coords vanish).
  bool is_rational() const;
  Rational rational_part() const;  // requires is_rational()

  NFElem operator-() const;
  NFElem& operator+=(const NFElem& o);
  NFElem& operator-=(const NFElem& o);
  NFElem& operator*=(const NFElem& o);
  NFElem& operator/=(const NFElem& o);
  friend NFElem operator+(NFElem a, const NFElem& b) { return a += b; }
  friend NFElem operator-(NFElem a, const NFElem& b) { return a -= b; }
  friend NFElem operator*(NFElem a, const NFElem& b) { return a *= b; }
  friend NFElem operator/(NFElem a, const NFElem& b) { return a /= b; }

  NFElem scaled(const Rational& r) const;
  NFElem inverse() const;  // DivisionByZero on zero
  NFElem pow(long e) const;

  bool operator==(const NFElem& o) const;
  bool operator!=(const NFElem& o) const { return !(*this == o); }

  // Numeric image under the embedding sending t to roots()[root_index].
  std::complex<double> embed(int root_index) const;

  // "0", "5", "-1/2 + 3/2*t", "t^2 - 2*t" — coordinates in increasing power,
  // zero coordinates skipped.
  std::string str() const;

private:
  void require_field(const char* op) const;
  void reduce();  // no-op: coords_ always has length degree()

  FieldPtr field_;
  std::vector<Rational> coords_;
};

// Throws FieldMismatch unless both elements live in the same field.
void require_same_field(const NFElem& a, const NFElem& b, const char* op);

// Ready-made descriptors used throughout the project.
FieldPtr field_sqrt5();       // t^2 - 5
FieldPtr field_zeta5();       // t^4 + t^3 + t^2 + t + 1
FieldPtr field_cbrt(long m);  // t^3 - m

// sqrt5 inside Q(zeta5): 2 t + 2 t^4 + 1, the square root of 5 whose image
// under the first embedding is positive.
NFElem sqrt5_in_zeta5(const FieldPtr& zeta5_field);

}  // namespace icoq
