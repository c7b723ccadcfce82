#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "icoq/errors.hpp"
#include "icoq/number_field.hpp"
#include "icoq/rational.hpp"

namespace icoq {

// Exponent vector, one entry per registry variable.
using ExpVec = std::vector<unsigned>;

inline long expvec_total(const ExpVec& e) {
  return std::accumulate(e.begin(), e.end(), 0L,
                         [](long s, unsigned x) { return s + static_cast<long>(x); });
}

// Graded reverse lexicographic order. a < b iff deg a < deg b, or the degrees
// tie and the rightmost nonzero entry of a-b is positive.
struct GrevlexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    long ta = expvec_total(a), tb = expvec_total(b);
    if (ta != tb) return ta < tb;
    for (size_t i = a.size(); i-- > 0;) {
      long d = static_cast<long>(a[i]) - static_cast<long>(b[i]);
      if (d != 0) return d > 0;
    }
    return false;
  }
};

// Pure lexicographic order (leftmost variable dominates); used only by the
// symmetric-function reduction, where termination needs it.
struct LexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

// ---- coefficient universe hooks (overloads, one set per coefficient type) --

inline Rational coeff_zero(const Rational&) { return Rational(0); }
inline Rational coeff_from_long(const Rational&, long long k) { return Rational(k); }
inline bool coeff_is_zero(const Rational& c) { return c.is_zero(); }
inline bool coeff_is_one(const Rational& c) { return c == Rational(1); }
// (negative?, magnitude) decomposition used by the printer.
inline std::pair<bool, Rational> coeff_sign_split(const Rational& c) {
  return {c.is_negative(), c.abs()};
}
inline std::string coeff_body_str(const Rational& c) { return c.str(); }
inline Rational coeff_parse_paren(const Rational&, const std::string& inner) {
  return Rational::parse(inner);
}

inline NFElem coeff_zero(const NFElem& like) { return NFElem(like.field()); }
inline NFElem coeff_from_long(const NFElem& like, long long k) {
  return NFElem::from_int(like.field(), k);
}
inline bool coeff_is_zero(const NFElem& c) { return c.is_zero(); }
inline bool coeff_is_one(const NFElem& c) {
  return c.is_rational() && c.rational_part() == Rational(1);
}
inline std::pair<bool, NFElem> coeff_sign_split(const NFElem& c) {
  if (c.is_rational() && c.rational_part().is_negative()) return {true, -c};
  return {false, c};
}
inline std::string coeff_body_str(const NFElem& c) {
  if (c.is_rational()) return c.rational_part().str();
  return "(" + c.str() + ")";
}
inline NFElem coeff_parse_paren(const NFElem& like, const std::string& inner) {
  return NFElem::parse(like.field(), inner);
}

// Multiply the coefficient-universe unit by a rational scalar.
inline Rational scale_unit(const Rational& one, const Rational& q) { return one * q; }
inline NFElem scale_unit(const NFElem& one, const Rational& q) { return one.scaled(q); }

// Result of a weighted-degree query: either homogeneous with a single degree,
// or the sorted list of distinct degrees that occur.
struct WeightedDegree {
  bool homogeneous;
  long degree;                // meaningful when homogeneous
  std::vector<long> degrees;  // sorted distinct degrees of the terms
};

// Sparse multivariate polynomial over an exact coefficient field C.
// Terms are kept in ascending grevlex order; printing walks them backwards so
// the leading term comes first. Every polynomial carries its variable registry
// (an ordered, duplicate-free list of names) and the multiplicative unit of
// its coefficient universe (which, for number-field coefficients, pins the
// field).
template <class C>
class MultiPoly {
public:
  using TermMap = std::map<ExpVec, C, GrevlexLess>;

  MultiPoly(std::vector<std::string> vars, C one)
      : vars_(std::move(vars)), one_(std::move(one)) {
    validate_registry();
  }

  static MultiPoly zero(std::vector<std::string> vars, C one) {
    return MultiPoly(std::move(vars), std::move(one));
  }

  static MultiPoly constant(std::vector<std::string> vars, C one, C value) {
    MultiPoly p(std::move(vars), std::move(one));
    p.add_term(ExpVec(p.nvars(), 0), std::move(value));
    return p;
  }

  static MultiPoly monomial(std::vector<std::string> vars, C one, ExpVec e, C coeff) {
    MultiPoly p(std::move(vars), std::move(one));
    if (e.size() != static_cast<size_t>(p.nvars()))
      fail("RegistryMismatch", "exponent vector length does not match registry size");
    p.add_term(std::move(e), std::move(coeff));
    return p;
  }

  static MultiPoly variable(std::vector<std::string> vars, C one, const std::string& name) {
    MultiPoly p(vars, one);
    ExpVec e(p.nvars(), 0);
    e[p.var_index(name)] = 1;
    p.add_term(std::move(e), one);
    return p;
  }

  static MultiPoly parse(std::vector<std::string> vars, C one, const std::string& text);

  const std::vector<std::string>& registry() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const C& one() const { return one_; }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  int var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    fail("UnknownVariable", "variable '" + name + "' is not in the registry " + registry_str());
  }

  C coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? coeff_zero(one_) : it->second;
  }

  // Leading term in grevlex order; ZeroPolynomial on the zero polynomial.
  std::pair<ExpVec, C> leading_term() const {
    if (terms_.empty()) fail("ZeroPolynomial", "leading term of the zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
  }

  void add_term(ExpVec e, C c) {
    if (coeff_is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(std::move(e), std::move(c));
    } else {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  MultiPoly operator-() const {
    MultiPoly r(vars_, one_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    require_same_registry(o, "add");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& o) {
    require_same_registry(o, "subtract");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_registry(b, "multiply");
    MultiPoly r(a.vars_, a.one_);
    ExpVec e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly scaled(const C& k) const {
    MultiPoly r(vars_, one_);
    if (coeff_is_zero(k)) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * k);
    return r;
  }

  MultiPoly pow(unsigned long k) const {
    MultiPoly acc = constant(vars_, one_, one_);
    MultiPoly base = *this;
    while (k > 0) {
      if (k & 1) acc *= base;
      if (k >>= 1) base *= base;
    }
    return acc;
  }

  MultiPoly diff(const std::string& var) const {
    int idx = var_index(var);
    MultiPoly r(vars_, one_);
    for (const auto& [e, c] : terms_) {
      if (e[idx] == 0) continue;
      ExpVec e2 = e;
      --e2[idx];
      r.add_term(std::move(e2), c * coeff_from_long(one_, e[idx]));
    }
    return r;
  }

  // Simultaneous substitution: every registry variable must be assigned
  // (MissingAssignment otherwise), and the images must all share one registry.
  MultiPoly subst(const std::map<std::string, MultiPoly>& images) const {
    const MultiPoly* sample = nullptr;
    std::vector<const MultiPoly*> img(vars_.size(), nullptr);
    for (size_t i = 0; i < vars_.size(); ++i) {
      auto it = images.find(vars_[i]);
      if (it == images.end())
        fail("MissingAssignment", "no image given for variable '" + vars_[i] + "'");
      img[i] = &it->second;
      if (!sample) sample = img[i];
      else sample->require_same_registry(*img[i], "substitute");
    }
    MultiPoly result(sample->vars_, sample->one_);
    // Cache powers of each image as they are needed.
    std::vector<std::vector<MultiPoly>> powers(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i)
      powers[i].push_back(constant(sample->vars_, sample->one_, sample->one_));
    auto power = [&](size_t i, unsigned k) -> const MultiPoly& {
      while (powers[i].size() <= k) powers[i].push_back(powers[i].back() * *img[i]);
      return powers[i][k];
    };
    for (const auto& [e, c] : terms_) {
      MultiPoly term = constant(sample->vars_, sample->one_, c);
      for (size_t i = 0; i < vars_.size(); ++i)
        if (e[i] > 0) term *= power(i, e[i]);
      result += term;
    }
    return result;
  }

  // Evaluate at a point given in registry order.
  C eval(const std::vector<C>& point) const {
    if (point.size() != vars_.size())
      fail("RegistryMismatch", "evaluation point length does not match registry size");
    C total = coeff_zero(one_);
    std::vector<std::vector<C>> powers(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) powers[i].push_back(one_);
    auto power = [&](size_t i, unsigned k) -> const C& {
      while (powers[i].size() <= k) powers[i].push_back(powers[i].back() * point[i]);
      return powers[i][k];
    };
    for (const auto& [e, c] : terms_) {
      C v = c;
      for (size_t i = 0; i < vars_.size(); ++i)
        if (e[i] > 0) v *= power(i, e[i]);
      total += v;
    }
    return total;
  }

  long total_degree() const {  // -1 for the zero polynomial
    if (terms_.empty()) return -1;
    return expvec_total(terms_.rbegin()->first);
  }

  long degree_in(const std::string& var) const {
    int idx = var_index(var);
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[idx]));
    return d;
  }

  WeightedDegree weighted_degree(const std::vector<long>& weights) const {
    if (weights.size() != vars_.size())
      fail("RegistryMismatch", "weight vector length does not match registry size");
    for (long w : weights)
      if (w < 1) fail("InternalInconsistency", "weights must be positive");
    std::vector<long> ds;
    for (const auto& [e, c] : terms_) {
      long d = 0;
      for (size_t i = 0; i < e.size(); ++i) d += weights[i] * static_cast<long>(e[i]);
      ds.push_back(d);
    }
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    if (ds.size() <= 1) return {true, ds.empty() ? 0 : ds[0], ds};
    return {false, 0, ds};
  }

  bool operator==(const MultiPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  std::string str() const;

  void require_same_registry(const MultiPoly& o, const char* op) const {
    if (vars_ != o.vars_)
      fail("RegistryMismatch", std::string(op) + " between registries " + registry_str() +
                                   " and " + o.registry_str());
  }

  std::string registry_str() const {
    std::string s = "[";
    for (size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
    return s + "]";
  }

private:
  void validate_registry() const {
    if (vars_.empty()) fail("SyntaxError", "variable registry must be nonempty");
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i].empty()) fail("SyntaxError", "empty variable name in registry");
      for (size_t j = i + 1; j < vars_.size(); ++j)
        if (vars_[i] == vars_[j])
          fail("SyntaxError", "duplicate variable '" + vars_[i] + "' in registry");
    }
  }

  std::vector<std::string> vars_;
  C one_;
  TermMap terms_;
};

// Convenience constructors for the two coefficient universes in use.
inline MultiPoly<Rational> qpoly(std::vector<std::string> vars) {
  return MultiPoly<Rational>(std::move(vars), Rational(1));
}
inline MultiPoly<NFElem> nfpoly(std::vector<std::string> vars, const FieldPtr& field) {
  return MultiPoly<NFElem>(std::move(vars), NFElem::from_int(field, 1));
}
inline MultiPoly<Rational> qparse(std::vector<std::string> vars, const std::string& text) {
  return MultiPoly<Rational>::parse(std::move(vars), Rational(1), text);
}
inline MultiPoly<NFElem> nfparse(std::vector<std::string> vars, const FieldPtr& field,
                                 const std::string& text) {
  return MultiPoly<NFElem>::parse(std::move(vars), NFElem::from_int(field, 1), text);
}

// Coefficient-wise promotion of a rational polynomial into a number field.
inline MultiPoly<NFElem> promote(const MultiPoly<Rational>& p, const FieldPtr& field) {
  MultiPoly<NFElem> r = nfpoly(p.registry(), field);
  for (const auto& [e, c] : p.terms())
    r.add_term(e, NFElem::from_rational(field, c));
  return r;
}

// ---------------------------------------------------------------------------
// printing

template <class C>
std::string MultiPoly<C>::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const ExpVec& e = it->first;
    auto [neg, mag] = coeff_sign_split(it->second);
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string body;
    if (mono.empty()) {
      body = coeff_body_str(mag);
    } else if (coeff_is_one(mag)) {
      body = mono;
    } else {
      body = coeff_body_str(mag) + "*" + mono;
    }
    if (out.empty()) {
      out = (neg ? "-" : "") + body;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// parsing

template <class C>
MultiPoly<C> MultiPoly<C>::parse(std::vector<std::string> vars, C one, const std::string& text) {
  MultiPoly<C> result(std::move(vars), std::move(one));
  size_t i = 0, n = text.size();
  auto skip = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto at_digit = [&] { return i < n && std::isdigit(static_cast<unsigned char>(text[i])); };
  auto at_alpha = [&] {
    return i < n && (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_');
  };
  auto parse_nat = [&](const char* what) -> unsigned long {
    if (!at_digit()) fail("SyntaxError", std::string("expected ") + what + " at position " +
                                             std::to_string(i) + " in '" + text + "'");
    unsigned long v = 0;
    while (at_digit()) v = v * 10 + static_cast<unsigned long>(text[i++] - '0');
    return v;
  };
  auto parse_number = [&]() -> C {
    BigInt num = 0;
    while (at_digit()) num = num * 10 + (text[i++] - '0');
    skip();
    Rational q(num);
    if (i < n && text[i] == '/') {
      ++i;
      skip();
      BigInt den = 0;
      if (!at_digit()) fail("SyntaxError", "missing denominator in '" + text + "'");
      while (at_digit()) den = den * 10 + (text[i++] - '0');
      q = Rational(num, den);
    }
    return scale_unit(result.one(), q);
  };

  skip();
  bool first = true;
  while (i < n) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = (text[i] == '-') ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail("SyntaxError",
           "expected '+' or '-' at position " + std::to_string(i) + " in '" + text + "'");
    }
    first = false;
    if (i >= n) fail("SyntaxError", "dangling sign at end of '" + text + "'");

    C coeff = result.one();
    ExpVec e(result.nvars(), 0);
    bool any_factor = false;
    for (;;) {
      skip();
      if (at_digit()) {
        coeff = coeff * parse_number();
        any_factor = true;
      } else if (i < n && text[i] == '(') {
        size_t depth = 1, j = i + 1;
        while (j < n && depth > 0) {
          if (text[j] == '(') ++depth;
          if (text[j] == ')') --depth;
          ++j;
        }
        if (depth != 0) fail("SyntaxError", "unbalanced parenthesis in '" + text + "'");
        std::string inner = text.substr(i + 1, j - i - 2);
        coeff = coeff * coeff_parse_paren(result.one(), inner);
        i = j;
        any_factor = true;
      } else if (at_alpha()) {
        std::string name;
        while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
          name += text[i++];
        int idx = result.var_index(name);
        unsigned long p = 1;
        skip();
        if (i < n && text[i] == '^') {
          ++i;
          skip();
          p = parse_nat("exponent");
        }
        e[idx] += static_cast<unsigned>(p);
        any_factor = true;
      } else {
        fail("SyntaxError",
             "expected a term at position " + std::to_string(i) + " in '" + text + "'");
      }
      skip();
      if (i < n && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!any_factor)
      fail("SyntaxError", "empty term in '" + text + "'");
    if (sign < 0) coeff = -coeff;
    result.add_term(std::move(e), std::move(coeff));
    skip();
  }
  return result;
}

// ---------------------------------------------------------------------------
// exact division (used where divisibility is guaranteed, e.g. Bareiss)

template <class C>
MultiPoly<C> exact_divide(MultiPoly<C> a, const MultiPoly<C>& b) {
  a.require_same_registry(b, "divide");
  if (b.is_zero()) fail("DivisionByZero", "polynomial division by zero");
  MultiPoly<C> q(a.registry(), a.one());
  auto [eb, cb] = b.leading_term();
  while (!a.is_zero()) {
    auto [ea, ca] = a.leading_term();
    ExpVec diff(ea.size());
    for (size_t i = 0; i < ea.size(); ++i) {
      if (ea[i] < eb[i])
        fail("InternalInconsistency", "exact polynomial division left a remainder");
      diff[i] = ea[i] - eb[i];
    }
    MultiPoly<C> t = MultiPoly<C>::monomial(a.registry(), a.one(), diff, ca / cb);
    q += t;
    a -= t * b;
  }
  return q;
}

// ---------------------------------------------------------------------------
// determinants

// Fraction-free Bareiss elimination; every division is exact.
template <class C>
MultiPoly<C> poly_det(std::vector<std::vector<MultiPoly<C>>> m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) fail("NonSquare", "determinant of a non-square matrix");
  if (n == 0) fail("NonSquare", "determinant of an empty matrix");
  const auto& vars = m[0][0].registry();
  const C& one = m[0][0].one();
  for (const auto& row : m)
    for (const auto& entry : row) m[0][0].require_same_registry(entry, "determinant");
  MultiPoly<C> unit = MultiPoly<C>::constant(vars, one, one);
  MultiPoly<C> prev = unit;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t pivot = k + 1;
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return MultiPoly<C>::zero(vars, one);
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        MultiPoly<C> num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = exact_divide(std::move(num), prev);
      }
      m[i][k] = MultiPoly<C>::zero(vars, one);
    }
    prev = m[k][k];
  }
  MultiPoly<C> det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

// Cofactor expansion; exponential, used as an oracle on small matrices.
template <class C>
MultiPoly<C> poly_det_cofactor(const std::vector<std::vector<MultiPoly<C>>>& m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) fail("NonSquare", "determinant of a non-square matrix");
  if (n == 0) fail("NonSquare", "determinant of an empty matrix");
  if (n == 1) return m[0][0];
  const auto& vars = m[0][0].registry();
  const C& one = m[0][0].one();
  MultiPoly<C> det = MultiPoly<C>::zero(vars, one);
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MultiPoly<C>>> minor;
    minor.reserve(n - 1);
    for (size_t i = 1; i < n; ++i) {
      std::vector<MultiPoly<C>> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    MultiPoly<C> term = m[0][j] * poly_det_cofactor(minor);
    if (j % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

// Determinant of the Jacobian matrix of `fs` with respect to `vars`,
// rows in the order of `fs`, columns in the order of `vars`.
template <class C>
MultiPoly<C> jacobian_det(const std::vector<MultiPoly<C>>& fs,
                          const std::vector<std::string>& vars) {
  if (fs.size() != vars.size())
    fail("NonSquare", "jacobian needs as many polynomials as variables");
  std::vector<std::vector<MultiPoly<C>>> m;
  for (const auto& f : fs) {
    std::vector<MultiPoly<C>> row;
    for (const auto& v : vars) row.push_back(f.diff(v));
    m.push_back(std::move(row));
  }
  return poly_det(std::move(m));
}

// Determinant of the Hessian of f bordered by the gradient of g:
//   [ d2f/dxi dxj   dg/dxi ]
//   [ (dg/dxj)^T       0   ]
template <class C>
MultiPoly<C> bordered_hessian_det(const MultiPoly<C>& f, const MultiPoly<C>& g,
                                  const std::vector<std::string>& vars) {
  size_t n = vars.size();
  const auto& reg = f.registry();
  const C& one = f.one();
  std::vector<std::vector<MultiPoly<C>>> m(n + 1,
                                           std::vector<MultiPoly<C>>(n + 1,
                                                                     MultiPoly<C>::zero(reg, one)));
  for (size_t i = 0; i < n; ++i) {
    MultiPoly<C> fi = f.diff(vars[i]);
    for (size_t j = 0; j < n; ++j) m[i][j] = fi.diff(vars[j]);
    MultiPoly<C> gi = g.diff(vars[i]);
    m[i][n] = gi;
    m[n][i] = gi;
  }
  return poly_det(std::move(m));
}

// ---------------------------------------------------------------------------
// resultant

// Coefficients of p with respect to `var`: entry k is the coefficient of
// var^k, a polynomial in the full registry with the var-exponent zeroed.
template <class C>
std::vector<MultiPoly<C>> coefficients_in(const MultiPoly<C>& p, const std::string& var) {
  int idx = p.var_index(var);
  long d = p.degree_in(var);
  std::vector<MultiPoly<C>> out(static_cast<size_t>(d + 1),
                                MultiPoly<C>::zero(p.registry(), p.one()));
  for (const auto& [e, c] : p.terms()) {
    ExpVec e2 = e;
    unsigned k = e2[idx];
    e2[idx] = 0;
    out[k].add_term(std::move(e2), c);
  }
  return out;
}

// Sylvester resultant of a and b with respect to `var`. The first deg_var(b)
// rows carry a's coefficients, the remaining deg_var(a) rows carry b's.
template <class C>
MultiPoly<C> resultant(const MultiPoly<C>& a, const MultiPoly<C>& b, const std::string& var) {
  a.require_same_registry(b, "resultant");
  if (a.is_zero() || b.is_zero())
    fail("ZeroPolynomial", "resultant of the zero polynomial");
  auto ca = coefficients_in(a, var);
  auto cb = coefficients_in(b, var);
  long da = static_cast<long>(ca.size()) - 1;
  long db = static_cast<long>(cb.size()) - 1;
  if (da == 0 && db == 0)
    fail("ZeroPolynomial", "resultant arguments must involve '" + var + "'");
  size_t n = static_cast<size_t>(da + db);
  MultiPoly<C> zero = MultiPoly<C>::zero(a.registry(), a.one());
  std::vector<std::vector<MultiPoly<C>>> m(n, std::vector<MultiPoly<C>>(n, zero));
  for (long r = 0; r < db; ++r)
    for (long k = 0; k <= da; ++k) m[r][r + da - k] = ca[k];
  for (long r = 0; r < da; ++r)
    for (long k = 0; k <= db; ++k) m[db + r][r + db - k] = cb[k];
  return poly_det(std::move(m));
}

}  // namespace icoq
