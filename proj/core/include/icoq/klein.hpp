#pragma once

#include <map>
#include <string>
#include <vector>

#include "icoq/matgroup.hpp"
#include "icoq/matrix.hpp"
#include "icoq/poly.hpp"

namespace icoq {

// Substitute x_i -> sum_j m[i][j] x_j (row i of the matrix is the image of
// the i-th registry variable).
template <class C>
MultiPoly<C> compose_linear(const MultiPoly<C>& p, const Mat<C>& m) {
  const auto& vars = p.registry();
  if (m.rows() != p.nvars() || m.cols() != p.nvars())
    fail("RegistryMismatch", "linear substitution matrix does not match the registry");
  std::map<std::string, MultiPoly<C>> images;
  for (int i = 0; i < p.nvars(); ++i) {
    MultiPoly<C> f = MultiPoly<C>::zero(vars, p.one());
    for (int j = 0; j < p.nvars(); ++j) {
      ExpVec e(vars.size(), 0);
      e[j] = 1;
      f.add_term(std::move(e), m.at(i, j));
    }
    images.emplace(vars[i], std::move(f));
  }
  return p.subst(images);
}

// Group average of p over all substitution actions of g's elements.
MultiPoly<NFElem> reynolds(const MatGroup& g, const MultiPoly<NFElem>& p);

// The invariant package on the ternary variables x0, x1, x2.
struct KleinPackage {
  MultiPoly<Rational> z2;            // 2 terms, degree 2
  MultiPoly<Rational> z6;            // 5 terms, degree 6
  MultiPoly<Rational> z10;           // 12 terms, degree 10
  MultiPoly<Rational> z15;           // 20 terms, degree 15
  MultiPoly<Rational> phi_formal;    // in z2, z6, z10; weighted-homogeneous of degree 30
  MultiPoly<Rational> phi_expanded;  // phi at the invariants, in x0, x1, x2
  MultiPoly<Rational> relation_residue;  // z15^2 - phi_expanded (must vanish)
};

// Builds z2 and z6 from their closed forms, derives z10 from the bordered
// Hessian and z15 from the Jacobian, and expands the degree-30 relation.
// PinFailure when any of the built-in pins (term counts, integrality of all
// coefficients, vanishing residue) breaks.
KleinPackage klein_construct();

// Pins for the ternary generator matrices: element orders 5, 2 and product
// order 3, group order 60, and literal invariance of z2 and z6 under both
// generators. PinFailure on any miss.
void verify_ternary_pins(const MatGroup& ternary, const KleinPackage& k);

// Degree-12 invariant of the binary group, normalized to unit coefficient on
// x1^11 x2.
struct BinaryInvariant {
  MultiPoly<Rational> h12;
  long invariant_dimension;  // dimension in degree 12 (expected 1)
};
BinaryInvariant binary_degree12_invariant(const MatGroup& binary);

// Dimensions of the degree-0..dmax invariants of the group, by exact linear
// algebra: a diagonal generator prunes the monomial basis directly, the
// remaining generators contribute kernel conditions (S_d(g) - I) v = 0.
std::vector<long> invariant_dims_linear(const MatGroup& g, int dmax);

}  // namespace icoq
