#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "icoq/poly.hpp"

namespace icoq {

// A plane-curve germ: the defining polynomial translated so that the queried
// point sits at the origin of the two chart variables.
template <class C>
struct CurveGerm {
  MultiPoly<C> f;        // vanishes at the origin
  std::vector<C> point;  // the original point
};

enum class GermType { Smooth, A, NotAType };

struct SingularityReport {
  GermType type = GermType::Smooth;
  long n = 0;  // the A_n index when type == A
  long multiplicity = 0;
  long milnor = 0;
  long delta = 0;  // ceil(n/2) for A_n, 0 otherwise
  int quadratic_rank = 0;

  std::string type_string() const {
    switch (type) {
      case GermType::Smooth:
        return "Smooth";
      case GermType::A:
        return "A" + std::to_string(n);
      default:
        return "NotAType";
    }
  }
};

// Translate f so that p becomes the origin; PointNotOnCurve when f(p) != 0.
template <class C>
CurveGerm<C> germ_localize(const MultiPoly<C>& f, const std::vector<C>& p) {
  if (f.nvars() != 2) fail("RegistryMismatch", "germs live in exactly two variables");
  if (p.size() != 2) fail("RegistryMismatch", "a germ point needs two coordinates");
  if (!coeff_is_zero(f.eval(p)))
    fail("PointNotOnCurve", "the polynomial does not vanish at the given point");
  const auto& vars = f.registry();
  std::map<std::string, MultiPoly<C>> shift;
  for (int i = 0; i < 2; ++i) {
    MultiPoly<C> image = MultiPoly<C>::variable(vars, f.one(), vars[i]);
    image.add_term(ExpVec{0, 0}, p[static_cast<size_t>(i)]);
    shift.emplace(vars[i], std::move(image));
  }
  return CurveGerm<C>{f.subst(shift), p};
}

namespace germ_detail {

// Coefficients in the first variable after setting the second to zero.
template <class C>
std::vector<C> restrict_to_axis(const MultiPoly<C>& f) {
  std::vector<C> out;
  for (const auto& [e, c] : f.terms()) {
    if (e[1] != 0) continue;
    size_t k = static_cast<size_t>(e[0]);
    if (out.size() <= k) out.resize(k + 1, coeff_zero(f.one()));
    out[k] = c;
  }
  while (!out.empty() && coeff_is_zero(out.back())) out.pop_back();
  return out;
}

template <class C>
long vanishing_order(const std::vector<C>& u) {
  for (size_t k = 0; k < u.size(); ++k)
    if (!coeff_is_zero(u[k])) return static_cast<long>(k);
  fail("InternalInconsistency", "vanishing order of the zero restriction");
}

// Divide out one factor of the second variable.
template <class C>
MultiPoly<C> strip_axis_factor(const MultiPoly<C>& f) {
  MultiPoly<C> out = MultiPoly<C>::zero(f.registry(), f.one());
  for (const auto& [e, c] : f.terms()) {
    if (e[1] < 1) fail("InternalInconsistency", "expected a factor of the second variable");
    ExpVec e2 = e;
    --e2[1];
    out.add_term(std::move(e2), c);
  }
  return out;
}

}  // namespace germ_detail

// Local intersection multiplicity at the origin by the classical recursion:
// drop to the first axis, peel off factors of the second variable, and reduce
// matched leading powers until a unit or an axis factor appears.
// CommonComponent when both curves contain a common branch through the origin.
template <class C>
long fulton_intersection(MultiPoly<C> f, MultiPoly<C> g) {
  using namespace germ_detail;
  if (f.nvars() != 2 || g.nvars() != 2)
    fail("RegistryMismatch", "intersection multiplicities need two-variable germs");
  if (f.registry() != g.registry())
    fail("RegistryMismatch", "intersection multiplicities need matching registries");
  // A finite local multiplicity never exceeds the product of the total
  // degrees, so crossing that bound certifies a common branch through the
  // origin (e.g. a shared factor of the first variable, which the axis
  // restrictions cannot see directly).
  long df = 0, dg = 0;
  for (const auto& [e, c] : f.terms()) df = std::max(df, expvec_total(e));
  for (const auto& [e, c] : g.terms()) dg = std::max(dg, expvec_total(e));
  const long fuel = df * dg;
  long total = 0;
  for (;;) {
    ExpVec origin{0, 0};
    if (!coeff_is_zero(f.coeff(origin)) || !coeff_is_zero(g.coeff(origin))) return total;
    if (f.is_zero() || g.is_zero())
      fail("CommonComponent", "intersection with the zero polynomial is infinite");
    std::vector<C> fu = restrict_to_axis(f);
    std::vector<C> gu = restrict_to_axis(g);
    if (fu.empty() && gu.empty())
      fail("CommonComponent", "both germs vanish on a common branch through the origin");
    if (fu.empty() || gu.empty()) {
      if (fu.empty()) std::swap(f, g), std::swap(fu, gu);
      // Now g is divisible by the second variable: I(f, v*rest) splits as
      // the vanishing order of f on the axis plus the remaining factor.
      total += vanishing_order(fu);
      if (total > fuel)
        fail("CommonComponent", "accumulated multiplicity exceeds the degree bound");
      g = strip_axis_factor(g);
      continue;
    }
    if (fu.size() > gu.size()) {
      std::swap(f, g);
      std::swap(fu, gu);
    }
    C ratio = gu.back() / fu.back();
    ExpVec shift{static_cast<unsigned>(gu.size() - fu.size()), 0};
    g -= MultiPoly<C>::monomial(f.registry(), f.one(), std::move(shift), std::move(ratio)) * f;
  }
}

// Milnor number of the germ: the intersection multiplicity of the two partial
// derivatives at the origin. NonIsolated when the critical locus has positive
// dimension.
template <class C>
long milnor_number(const CurveGerm<C>& germ) {
  const auto& vars = germ.f.registry();
  try {
    return fulton_intersection(germ.f.diff(vars[0]), germ.f.diff(vars[1]));
  } catch (const Error& e) {
    if (std::string(e.code()) == "CommonComponent")
      fail("NonIsolated", "the critical locus through the origin is positive-dimensional");
    throw;
  }
}

// A-type classification by Milnor number and the rank of the quadratic part.
template <class C>
SingularityReport classify(const CurveGerm<C>& germ) {
  SingularityReport r;
  r.milnor = milnor_number(germ);

  r.multiplicity = 0;
  if (!germ.f.is_zero()) {
    long best = -1;
    for (const auto& [e, c] : germ.f.terms()) {
      long t = expvec_total(e);
      if (best < 0 || t < best) best = t;
    }
    r.multiplicity = best;
  }

  C a = germ.f.coeff(ExpVec{2, 0});
  C b = germ.f.coeff(ExpVec{1, 1});
  C c = germ.f.coeff(ExpVec{0, 2});
  // Rank of the symmetric matrix [[2a, b], [b, 2c]] of the quadratic part.
  C disc = coeff_from_long(germ.f.one(), 4) * a * c - b * b;
  if (!coeff_is_zero(disc)) r.quadratic_rank = 2;
  else if (!coeff_is_zero(a) || !coeff_is_zero(b) || !coeff_is_zero(c)) r.quadratic_rank = 1;
  else r.quadratic_rank = 0;

  if (r.milnor == 0) {
    r.type = GermType::Smooth;
    return r;
  }
  if (r.quadratic_rank == 2) {
    if (r.milnor != 1)
      fail("InternalInconsistency", "rank-2 quadratic part forces Milnor number one");
    r.type = GermType::A;
    r.n = 1;
    r.delta = 1;
    return r;
  }
  if (r.quadratic_rank == 1) {
    r.type = GermType::A;
    r.n = r.milnor;
    r.delta = (r.n + 1) / 2;
    return r;
  }
  r.type = GermType::NotAType;
  return r;
}

}  // namespace icoq
