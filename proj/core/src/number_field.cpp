#include "icoq/number_field.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace icoq {

namespace {

// ---- dense univariate arithmetic over Q, coefficients low-to-high ----

using UPoly = std::vector<Rational>;

void utrim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }  // -1 for zero

UPoly usub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  utrim(a);
  return a;
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  utrim(r);
  return r;
}

// Quotient of a by nonzero b; remainder discarded by the caller when needed.
std::pair<UPoly, UPoly> udivmod(UPoly a, const UPoly& b) {
  UPoly q;
  utrim(a);
  if (udeg(a) >= udeg(b)) q.resize(udeg(a) - udeg(b) + 1);
  while (udeg(a) >= udeg(b)) {
    int k = udeg(a) - udeg(b);
    Rational c = a.back() / b.back();
    q[k] = c;
    UPoly shifted(k);
    shifted.insert(shifted.end(), b.begin(), b.end());
    for (auto& x : shifted) x *= c;
    a = usub(a, shifted);
  }
  return {q, a};
}

bool integer_root_exists(const std::vector<BigInt>& f) {
  // Monic integer polynomial: any rational root is an integer dividing f[0].
  if (f[0] == 0) return true;
  BigInt c0 = f[0] < 0 ? BigInt(-f[0]) : f[0];
  std::vector<BigInt> divisors;
  for (BigInt d = 1; d * d <= c0; ++d) {
    if (c0 % d == 0) {
      divisors.push_back(d);
      divisors.push_back(c0 / d);
    }
  }
  for (const BigInt& d : divisors) {
    for (int sign : {1, -1}) {
      BigInt x = sign * d;
      BigInt v = 0;
      for (auto it = f.rbegin(); it != f.rend(); ++it) v = v * x + *it;
      if (v == 0) return true;
    }
  }
  return false;
}

bool quartic_has_quadratic_factor(const std::vector<BigInt>& f) {
  // Search monic integer factors x^2 + a x + b of the monic quartic f.
  // b divides f[0] (nonzero here: zero constant term was caught earlier),
  // and |a| is at most twice the root bound 1 + max|c_i|.
  BigInt c0 = f[0] < 0 ? BigInt(-f[0]) : f[0];
  BigInt maxc = 0;
  for (const BigInt& c : f) maxc = std::max(maxc, c < 0 ? BigInt(-c) : c);
  BigInt abound = 2 * (1 + maxc);
  std::vector<BigInt> bs;
  for (BigInt d = 1; d * d <= c0; ++d) {
    if (c0 % d == 0) {
      bs.push_back(d);
      bs.push_back(c0 / d);
    }
  }
  for (const BigInt& babs : bs) {
    for (int bsign : {1, -1}) {
      BigInt b = bsign * babs;
      for (BigInt a = -abound; a <= abound; ++a) {
        // f = (x^2 + a x + b)(x^2 + c x + d) forces c = f3 - a and
        // d = f2 - b - a*c; the two remaining coefficients are the check.
        BigInt c = f[3] - a;
        BigInt d = f[2] - b - a * c;
        if (a * d + b * c == f[1] && b * d == f[0]) return true;
      }
    }
  }
  return false;
}

std::complex<double> horner(const std::vector<BigInt>& f, std::complex<double> x) {
  std::complex<double> v = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it)
    v = v * x + std::complex<double>(it->convert_to<double>(), 0.0);
  return v;
}

}  // namespace

FieldPtr NumberField::make(const std::vector<BigInt>& minpoly, const std::string& symbol) {
  if (minpoly.size() < 2)
    fail("ReduciblePolynomial", "minimal polynomial must have degree at least 1");
  if (minpoly.back() != 1)
    fail("NotMonic", "minimal polynomial must be monic with integer coefficients");
  int deg = static_cast<int>(minpoly.size()) - 1;
  if (deg > 4)
    fail("ReduciblePolynomial",
         "fields of degree > 4 are outside the supported range (irreducibility "
         "is only decided exactly up to quartics)");
  if (symbol.empty() || !(std::isalpha(static_cast<unsigned char>(symbol[0])) || symbol[0] == '_'))
    fail("SyntaxError", "field symbol must be an identifier, got '" + symbol + "'");
  if (deg >= 2 && integer_root_exists(minpoly))
    fail("ReduciblePolynomial", "minimal polynomial has a rational root");
  if (deg == 4 && quartic_has_quadratic_factor(minpoly))
    fail("ReduciblePolynomial", "quartic splits into two integer quadratics");
  return FieldPtr(new NumberField(minpoly, symbol));
}

const std::vector<std::complex<double>>& NumberField::roots() const {
  if (!roots_.empty()) return roots_;
  int n = degree();
  std::vector<std::complex<double>> x(n);
  std::complex<double> seed(0.4, 0.9);
  x[0] = seed;
  for (int k = 1; k < n; ++k) x[k] = x[k - 1] * seed;
  for (int iter = 0; iter < 1000; ++iter) {
    double shift = 0.0;
    for (int k = 0; k < n; ++k) {
      std::complex<double> denom = 1.0;
      for (int j = 0; j < n; ++j)
        if (j != k) denom *= x[k] - x[j];
      std::complex<double> delta = horner(minpoly_, x[k]) / denom;
      x[k] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-15) break;
  }
  // Snap values that are numerically real, then order them.
  for (auto& r : x)
    if (std::abs(r.imag()) < 1e-10) r = std::complex<double>(r.real(), 0.0);
  std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) {
    if (std::abs(a.real() - b.real()) > 1e-8) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  roots_ = std::move(x);
  return roots_;
}

// ---------------------------------------------------------------------------

NFElem::NFElem(FieldPtr field) : field_(std::move(field)) {
  coords_.assign(field_->degree(), Rational(0));
}

NFElem::NFElem(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != field_->degree())
    fail("FieldMismatch", "coordinate vector length does not match field degree");
}

NFElem NFElem::from_rational(const FieldPtr& field, const Rational& r) {
  NFElem e(field);
  e.coords_[0] = r;
  return e;
}

NFElem NFElem::gen(const FieldPtr& field) {
  NFElem e(field);
  if (field->degree() == 1) {
    // t is congruent to -c0 modulo a linear minimal polynomial.
    e.coords_[0] = Rational(-field->minpoly()[0]);
  } else {
    e.coords_[1] = Rational(1);
  }
  return e;
}

void NFElem::require_field(const char* op) const {
  if (!field_) fail("FieldMismatch", std::string(op) + " on a default-constructed element");
}

void require_same_field(const NFElem& a, const NFElem& b, const char* op) {
  if (!a.field() || !b.field())
    fail("FieldMismatch", std::string(op) + " on a default-constructed element");
  if (!NumberField::same(*a.field(), *b.field()))
    fail("FieldMismatch", std::string(op) + " between elements of different fields (" +
                              a.field()->symbol() + " vs " + b.field()->symbol() + ")");
}

bool NFElem::is_zero() const {
  require_field("is_zero");
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c.is_zero(); });
}

bool NFElem::is_rational() const {
  require_field("is_rational");
  for (size_t i = 1; i < coords_.size(); ++i)
    if (!coords_[i].is_zero()) return false;
  return true;
}

Rational NFElem::rational_part() const {
  if (!is_rational()) fail("FieldMismatch", "rational_part of a non-rational element");
  return coords_[0];
}

NFElem NFElem::operator-() const {
  require_field("negate");
  NFElem r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

NFElem& NFElem::operator+=(const NFElem& o) {
  require_same_field(*this, o, "add");
  for (size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

NFElem& NFElem::operator-=(const NFElem& o) {
  require_same_field(*this, o, "subtract");
  for (size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

NFElem& NFElem::operator*=(const NFElem& o) {
  require_same_field(*this, o, "multiply");
  int d = field_->degree();
  std::vector<Rational> prod(2 * d - 1);
  for (int i = 0; i < d; ++i) {
    if (coords_[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (o.coords_[j].is_zero()) continue;
      prod[i + j] += coords_[i] * o.coords_[j];
    }
  }
  // Reduce modulo the monic minimal polynomial: t^d = -(c0 + ... + c_{d-1} t^{d-1}).
  const auto& f = field_->minpoly();
  for (int k = 2 * d - 2; k >= d; --k) {
    Rational lead = prod[k];
    if (lead.is_zero()) continue;
    prod[k] = Rational(0);
    for (int j = 0; j < d; ++j) prod[k - d + j] -= lead * Rational(f[j]);
  }
  prod.resize(d);
  coords_ = std::move(prod);
  return *this;
}

NFElem NFElem::scaled(const Rational& r) const {
  require_field("scale");
  NFElem e = *this;
  for (auto& c : e.coords_) c *= r;
  return e;
}

NFElem NFElem::inverse() const {
  require_field("invert");
  if (is_zero()) fail("DivisionByZero", "inverse of zero field element");
  int d = field_->degree();
  UPoly f(d + 1);
  for (int i = 0; i <= d; ++i) f[i] = Rational(field_->minpoly()[i]);
  UPoly a = coords_;
  utrim(a);
  // Extended Euclid in Q[t]: old_r = s*f + old_t*a; the gcd is a nonzero
  // constant because the minimal polynomial is irreducible.
  UPoly old_r = f, r = a;
  UPoly old_t = {}, t = {Rational(1)};
  while (!r.empty()) {
    auto [q, rem] = udivmod(old_r, r);
    old_r = std::move(r);
    r = std::move(rem);
    UPoly next_t = usub(old_t, umul(q, t));
    old_t = std::move(t);
    t = std::move(next_t);
  }
  if (udeg(old_r) != 0)
    fail("InternalInconsistency", "gcd with the minimal polynomial is not constant");
  Rational g = old_r[0];
  old_t.resize(d);
  for (auto& c : old_t) c /= g;
  return NFElem(field_, std::move(old_t));
}

NFElem& NFElem::operator/=(const NFElem& o) {
  require_same_field(*this, o, "divide");
  return *this *= o.inverse();
}

NFElem NFElem::pow(long e) const {
  require_field("pow");
  if (e < 0) return inverse().pow(-e);
  NFElem acc = from_rational(field_, Rational(1));
  NFElem base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool NFElem::operator==(const NFElem& o) const {
  if (!field_ || !o.field_) return !field_ && !o.field_;
  return NumberField::same(*field_, *o.field_) && coords_ == o.coords_;
}

std::complex<double> NFElem::embed(int root_index) const {
  require_field("embed");
  const auto& roots = field_->roots();
  if (root_index < 0 || root_index >= static_cast<int>(roots.size()))
    fail("RootIndexOutOfRange", "root index " + std::to_string(root_index) + " for a degree-" +
                                    std::to_string(field_->degree()) + " field");
  std::complex<double> t = roots[root_index], v = 0, p = 1;
  for (const auto& c : coords_) {
    v += c.to_double() * p;
    p *= t;
  }
  return v;
}

std::string NFElem::str() const {
  require_field("print");
  std::string out;
  const std::string& sym = field_->symbol();
  for (size_t k = 0; k < coords_.size(); ++k) {
    const Rational& c = coords_[k];
    if (c.is_zero()) continue;
    bool neg = c.is_negative();
    Rational mag = c.abs();
    std::string body;
    if (k == 0) {
      body = mag.str();
    } else {
      std::string power = sym + (k == 1 ? "" : "^" + std::to_string(k));
      body = (mag == Rational(1)) ? power : mag.str() + "*" + power;
    }
    if (out.empty()) {
      out = (neg ? "-" : "") + body;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

NFElem NFElem::parse(const FieldPtr& field, const std::string& text) {
  size_t i = 0, n = text.size();
  auto skip = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto at_digit = [&] { return i < n && std::isdigit(static_cast<unsigned char>(text[i])); };
  auto at_alpha = [&] {
    return i < n && (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_');
  };
  auto number = [&]() -> Rational {
    std::string digits;
    while (at_digit()) digits += text[i++];
    skip();
    if (i < n && text[i] == '/') {
      ++i;
      skip();
      std::string den;
      while (at_digit()) den += text[i++];
      if (den.empty()) fail("SyntaxError", "missing denominator in '" + text + "'");
      return Rational(BigInt(digits), BigInt(den));
    }
    return Rational(BigInt(digits));
  };
  auto identifier = [&]() -> std::string {
    std::string name;
    while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
      name += text[i++];
    return name;
  };

  NFElem result(field);
  skip();
  bool first = true;
  while (i < n) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail("SyntaxError", "expected '+' or '-' at position " + std::to_string(i) + " in '" + text + "'");
    }
    first = false;

    Rational coeff(1);
    long power = 0;
    bool saw_number = false, saw_symbol = false;
    if (at_digit()) {
      coeff = number();
      saw_number = true;
      skip();
      if (i < n && text[i] == '*') {
        ++i;
        skip();
      } else if (at_alpha()) {
        fail("SyntaxError", "missing '*' between coefficient and symbol in '" + text + "'");
      }
    }
    if (at_alpha()) {
      std::string name = identifier();
      if (name != field->symbol())
        fail("UnknownVariable", "symbol '" + name + "' is not the field generator '" +
                                    field->symbol() + "'");
      saw_symbol = true;
      power = 1;
      skip();
      if (i < n && text[i] == '^') {
        ++i;
        skip();
        if (!at_digit()) fail("SyntaxError", "missing exponent in '" + text + "'");
        power = 0;
        while (at_digit()) power = power * 10 + (text[i++] - '0');
      }
    }
    if (!saw_number && !saw_symbol)
      fail("SyntaxError", "expected a term at position " + std::to_string(i) + " in '" + text + "'");
    if (sign < 0) coeff = -coeff;
    NFElem term = NFElem::gen(field).pow(power).scaled(coeff);
    result += term;
    skip();
  }
  return result;
}

// ---------------------------------------------------------------------------

FieldPtr field_sqrt5() {
  static FieldPtr f = NumberField::make({-5, 0, 1}, "s");
  return f;
}

FieldPtr field_zeta5() {
  static FieldPtr f = NumberField::make({1, 1, 1, 1, 1}, "z");
  return f;
}

FieldPtr field_cbrt(long m) {
  return NumberField::make({-m, 0, 0, 1}, "t");
}

NFElem sqrt5_in_zeta5(const FieldPtr& zeta5_field) {
  NFElem z = NFElem::gen(zeta5_field);
  NFElem s = z.scaled(Rational(2)) + z.pow(4).scaled(Rational(2)) +
             NFElem::from_int(zeta5_field, 1);
  return s;
}

}  // namespace icoq
