#pragma once

#include <optional>
#include <vector>

#include "icoq/matrix.hpp"
#include "icoq/number_field.hpp"

namespace icoq {

// Finite matrix group over a number field, stored by its full element list.
class MatGroup {
public:
  // Closure of the generators; OrderBoundExceeded past the bound.
  static MatGroup closure(FieldPtr field, int dim, std::vector<Mat<NFElem>> gens,
                          size_t order_bound = 1000);

  const FieldPtr& field() const { return field_; }
  int dim() const { return dim_; }
  size_t order() const { return elements_.size(); }
  const std::vector<Mat<NFElem>>& elements() const { return elements_; }
  const std::vector<Mat<NFElem>>& generators() const { return gens_; }
  const Mat<NFElem>& identity() const { return elements_[identity_index_]; }

  std::optional<int> index_of(const Mat<NFElem>& m) const;
  int element_order(int index) const;

  struct ConjClass {
    int rep_index;
    size_t size;
    int element_order;
  };
  // Sorted by (element order, class size, smallest member index).
  std::vector<ConjClass> conjugacy_classes() const;

  // Indices of central elements (commuting with every generator).
  std::vector<int> center_indices() const;

private:
  MatGroup() = default;

  FieldPtr field_;
  int dim_ = 0;
  std::vector<Mat<NFElem>> elements_;
  std::vector<Mat<NFElem>> gens_;
  std::vector<int> orders_;  // cached element orders
  int identity_index_ = 0;
};

// The binary icosahedral group: the 120-element subgroup of SL2 over Q(zeta5)
// generated by diag(-z^3, -z^2) and (1/sqrt5) [[-(z - z^4), z^2 - z^3],
// [z^2 - z^3, z - z^4]].
MatGroup binary_icosahedral();

// Induced 3x3 matrix of a 2x2 matrix on the invariant-quadric basis; the
// basis convention is pinned by the requirement that the quadric x0^2 + x1*x2
// and the degree-6 invariant are literally preserved.
Mat<NFElem> ternary_of(const Mat<NFElem>& g);

// The 60-element image of the binary group under ternary_of.
MatGroup ternary_icosahedral(const MatGroup& binary);

}  // namespace icoq
