#pragma once

#include <string>
#include <vector>

#include "icoq/poly.hpp"

namespace icoq {

// Variable registries used by the symmetric-function layer: root variables
// x1..xn and elementary-symmetric variables z1..zn.
std::vector<std::string> root_vars(int n);
std::vector<std::string> esym_vars(int n);

// k-th elementary symmetric polynomial in x1..xn (k = 0 gives 1).
MultiPoly<Rational> elementary_symmetric(int k, int n);

// Invariance under the transposition (x1 x2) and the full n-cycle; those two
// generate all permutations of the variables.
bool is_symmetric(const MultiPoly<Rational>& p);

// prod_{i > j} (xi - xj), the alternating square root of the discriminant.
MultiPoly<Rational> vandermonde_product(int n);

// Apply a permutation to the variables: sigma maps index i to images[i].
MultiPoly<Rational> permute_vars(const MultiPoly<Rational>& p, const std::vector<int>& images);

// Rewrite a symmetric polynomial as a polynomial in z1..zn via classical
// lexicographic reduction. Throws NotSymmetric when the input is not
// symmetric (detected either up front or by a non-descending leading term).
// `steps_out`, when given, receives the number of reduction steps.
MultiPoly<Rational> to_elementary(const MultiPoly<Rational>& p, long* steps_out = nullptr);

// The quintic-discriminant presentation package.
struct DiscriminantSuite {
  int n;                               // number of roots (5)
  std::vector<MultiPoly<Rational>> e;  // e1..e5 in x1..x5
  MultiPoly<Rational> vandermonde;     // in x1..x5, 120 terms
  MultiPoly<Rational> square;          // its square, 2961 terms
  MultiPoly<Rational> delta;           // in z1..z5, the discriminant
  MultiPoly<Rational> psi;             // delta at z1 = 0, in z2..z5
  MultiPoly<Rational> upsilon;         // delta at z1 = z2 = 0, in z3, z4, z5
  MultiPoly<Rational> upsilon_chart;   // upsilon at z3 = 1, in z4, z5
  long reduction_steps;
};

DiscriminantSuite quintic_discriminant();

}  // namespace icoq
