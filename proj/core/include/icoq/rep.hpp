#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "icoq/matgroup.hpp"
#include "icoq/matrix.hpp"
#include "icoq/perm.hpp"
#include "icoq/poly.hpp"

namespace icoq {

// Monomial basis of degree k in n variables, grevlex-descending (the pure
// power of the first variable comes first).
std::vector<ExpVec> monomial_basis(int n, int k);

// Induced matrix on the degree-k monomial basis. Row q of the result lists
// the expansion of the image of basis monomial q, which makes the map a group
// homomorphism and reduces to the matrix itself at k = 1.
template <class C>
Mat<C> sym_power_matrix(const Mat<C>& a, int k) {
  if (!a.is_square()) fail("NonSquare", "symmetric power of a non-square matrix");
  int n = a.rows();
  auto basis = monomial_basis(n, k);
  std::map<ExpVec, int, GrevlexLess> where;
  for (size_t i = 0; i < basis.size(); ++i) where.emplace(basis[i], static_cast<int>(i));
  std::vector<std::string> vars;
  for (int i = 0; i < n; ++i) vars.push_back("u" + std::to_string(i));
  C zero = coeff_zero(a.at(0, 0));
  C one = coeff_from_long(a.at(0, 0), 1);
  std::vector<MultiPoly<C>> linform;
  for (int i = 0; i < n; ++i) {
    MultiPoly<C> f = MultiPoly<C>::zero(vars, one);
    for (int j = 0; j < n; ++j) {
      ExpVec e(n, 0);
      e[j] = 1;
      f.add_term(std::move(e), a.at(i, j));
    }
    linform.push_back(std::move(f));
  }
  int m = static_cast<int>(basis.size());
  Mat<C> r(m, m, zero);
  for (int q = 0; q < m; ++q) {
    MultiPoly<C> image = MultiPoly<C>::constant(vars, one, one);
    for (int i = 0; i < n; ++i)
      if (basis[q][i] > 0) image *= linform[i].pow(basis[q][i]);
    for (const auto& [e, c] : image.terms()) r.at(q, where.at(e)) = c;
  }
  return r;
}

// ---------------------------------------------------------------------------
// representations of the degree-5 symmetric group over Q

struct QRep {
  std::string label;
  int dim;
  std::function<Mat<Rational>(const Perm&)> of;
};

QRep rep_trivial();
QRep rep_sign();
// Permutation representation minus the invariant line, on the basis
// f_i = e_i - e_n (an integer matrix model).
QRep rep_standard(int degree);
QRep rep_tensor_sign(std::string label, const QRep& r);
QRep rep_wedge2(std::string label, const QRep& r);
// S^2(base) with the trivial and base constituents projected away.
QRep rep_sym2_complement(std::string label, const PermGroup& g, const QRep& base);

// The seven irreducible representations in reference-table row order:
// W1, W1', W4, W4', W6, W5, W5'.
std::vector<QRep> s5_irreps(const PermGroup& s5);

std::vector<Rational> character(const QRep& r,
                                const std::vector<PermGroup::ConjClass>& classes);

// ---------------------------------------------------------------------------
// representations of the binary icosahedral matrix group

struct NFRep {
  std::string label;
  int dim;
  std::function<Mat<NFElem>(const Mat<NFElem>&)> of;  // applied to the 2x2 element
};

// Coordinate shift t -> t^2; the Galois twist used to pair conjugate
// representations. Valid for the cyclotomic field of the project.
NFElem galois_shift(const NFElem& e);
Mat<NFElem> galois_shift_mat(const Mat<NFElem>& m);

// The nine irreducible representations in reference-table row order:
// V1, V2, V2', V3, V3', V4, V4', V5, V6.
std::vector<NFRep> binary_irreps(const FieldPtr& field);

// Class layout of the binary group matching the reference column order:
// element orders (1, 2, 4, 5, 5, 10, 10, 6, 3). The two order-5 (and the two
// order-10) classes are distinguished by the defining-representation trace.
struct BinaryClassLayout {
  std::vector<int> rep_indices;
  std::vector<size_t> sizes;
  std::vector<int> orders;
};
BinaryClassLayout binary_class_layout(const MatGroup& g);

std::vector<NFElem> nf_character(const NFRep& r, const MatGroup& g,
                                 const std::vector<int>& class_rep_indices);

// ---------------------------------------------------------------------------
// Molien series

// Invariant dimensions in degrees 0..dmax from the class data of a matrix
// representation, by the Newton power-sum recursion applied to
// 1/det(1 - t g). Exact; every dimension must come out a rational integer
// (NonIntegralDimension otherwise).
std::vector<long> molien_dims(const std::vector<Mat<NFElem>>& class_reps,
                              const std::vector<size_t>& class_sizes, size_t group_order,
                              int dmax);

// Coefficients 0..dmax of (1 + t^numer_shift) / prod_i (1 - t^denom_degrees[i]);
// numer_shift = 0 means numerator 1.
std::vector<long> series_coeffs(const std::vector<int>& denom_degrees, int numer_shift,
                                int dmax);

// ---------------------------------------------------------------------------
// trace tables

struct QCharTable {
  std::vector<std::string> class_labels;
  std::vector<size_t> class_sizes;
  std::vector<int> class_orders;
  std::vector<Perm> class_reps;
  std::vector<std::string> row_labels;
  std::vector<std::vector<Rational>> rows;
};

QCharTable s5_character_table(const PermGroup& s5);

struct NFCharTable {
  std::vector<size_t> class_sizes;
  std::vector<int> class_orders;
  std::vector<int> class_rep_indices;
  std::vector<std::string> row_labels;
  std::vector<std::vector<NFElem>> rows;
};

NFCharTable binary_character_table(const MatGroup& g);

// First orthogonality: <chi_i, chi_j> computed as
// (1/|G|) sum_c |c| chi_i(c) chi_j(c^{-1}).
bool q_table_orthonormal(const PermGroup& g, const QCharTable& t,
                         const std::vector<QRep>& reps);
bool nf_table_orthonormal(const MatGroup& g, const NFCharTable& t,
                          const std::vector<NFRep>& reps);

// Fixed-point trace data for the regular action on the lattice model:
// Lefschetz number 2 + tr(Pic) per class, the trace being chi_W4 + 1.
struct LefschetzTable {
  std::vector<std::string> class_labels;
  std::vector<size_t> class_sizes;
  std::vector<Rational> pic_traces;
  std::vector<Rational> lefschetz;
};

LefschetzTable lefschetz_table(const PermGroup& s5);

}  // namespace icoq
