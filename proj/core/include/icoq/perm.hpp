#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "icoq/errors.hpp"

namespace icoq {

// Permutation of {0..n-1}, stored as the image list; printing is 1-based.
class Perm {
public:
  Perm() = default;
  explicit Perm(int n) : img_(n) {
    for (int i = 0; i < n; ++i) img_[i] = i;
  }
  static Perm from_images(std::vector<int> images);
  // Cycles use 1-based point names, e.g. {{1,2},{3,4}}.
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  // Cycle words like "(1,2)(3,4)" or "(1 2 3)"; "e" or "()" is the identity.
  static Perm parse(int n, const std::string& text);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  // Composition acts on the left: (a*b)(x) = a(b(x)).
  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  bool is_identity() const;
  int order() const;
  bool even() const;

  // Cycle lengths in weakly decreasing order, fixed points included; this is
  // the full cycle type (a partition of the degree).
  std::vector<int> cycle_type() const;
  // Nontrivial cycles, each starting at its smallest point, sorted.
  std::vector<std::vector<int>> cycles() const;
  std::string cycle_string() const;  // "(1 2)(3 4)", identity prints "e"

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

private:
  std::vector<int> img_;
};

struct SubgroupClassRecord {
  size_t order;
  std::string label;            // isomorphism-type label from the catalogue
  bool in_alternating;          // every element even
  size_t count;                 // size of the conjugacy class of subgroups
  size_t normalizer_order;      // |N_G(H)| for the representative
  std::vector<Perm> generators; // generating set found for the representative
  std::vector<Perm> elements;   // sorted element list of the representative
};

// Finite permutation group given by its full, sorted element list.
class PermGroup {
public:
  // Closure of the generators; OrderBoundExceeded if it grows past the bound.
  static PermGroup closure(int degree, std::vector<Perm> gens, size_t order_bound = 1000);
  static PermGroup symmetric(int n);
  static PermGroup alternating(int n);

  int degree() const { return degree_; }
  size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return gens_; }
  bool contains(const Perm& p) const;

  struct ConjClass {
    Perm rep;
    size_t size;
    int element_order;
  };
  // Sorted by (element order, class size, representative image list).
  std::vector<ConjClass> conjugacy_classes() const;

  bool is_subgroup_of(const PermGroup& g) const;
  PermGroup normalizer_of(const PermGroup& h) const;
  PermGroup centralizer_of(const Perm& x) const;
  // A Sylow p-subgroup, built by iterated normalizer growth.
  PermGroup sylow(unsigned p) const;

  // Conjugacy classes of proper nontrivial subgroups, sorted by
  // (order, label, in_alternating). Enumerates every subgroup by closure
  // growth, so it is meant for |G| up to a few hundred.
  std::vector<SubgroupClassRecord> subgroup_census() const;

private:
  PermGroup(int degree, std::vector<Perm> elements, std::vector<Perm> gens)
      : degree_(degree), elements_(std::move(elements)), gens_(std::move(gens)) {}

  int degree_ = 0;
  std::vector<Perm> elements_;  // sorted
  std::vector<Perm> gens_;
};

// Isomorphism-type label of a group given by its element list. The catalogue
// covers the types that occur among subgroups of degree-5 permutation groups:
// cyclic groups, mu2 x mu2, S3, D4, D5, D6, A4, mu5:mu4, S4, A5.
// Throws UnrecognizedType for anything else.
std::string iso_fingerprint(const std::vector<Perm>& elements);

}  // namespace icoq
