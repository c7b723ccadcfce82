#include "icoq/matgroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace icoq {

MatGroup MatGroup::closure(FieldPtr field, int dim, std::vector<Mat<NFElem>> gens,
                           size_t order_bound) {
  MatGroup g;
  g.field_ = std::move(field);
  g.dim_ = dim;
  NFElem one = NFElem::from_int(g.field_, 1);
  Mat<NFElem> id = Mat<NFElem>::identity(dim, one);
  std::map<std::string, int> index;
  g.elements_.push_back(id);
  index.emplace(id.key(), 0);
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int i : frontier) {
      for (const auto& gen : gens) {
        Mat<NFElem> y = g.elements_[i] * gen;
        std::string k = y.key();
        if (index.emplace(k, static_cast<int>(g.elements_.size())).second) {
          if (g.elements_.size() + 1 > order_bound)
            fail("OrderBoundExceeded",
                 "closure exceeded the order bound " + std::to_string(order_bound));
          next.push_back(static_cast<int>(g.elements_.size()));
          g.elements_.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  g.gens_ = std::move(gens);
  g.identity_index_ = 0;
  g.orders_.assign(g.elements_.size(), 0);
  return g;
}

std::optional<int> MatGroup::index_of(const Mat<NFElem>& m) const {
  // Linear scan over the element list; group orders here stay in the hundreds.
  for (size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == m) return static_cast<int>(i);
  return std::nullopt;
}

int MatGroup::element_order(int index) const {
  int& cached = const_cast<MatGroup*>(this)->orders_[index];
  if (cached > 0) return cached;
  const Mat<NFElem>& m = elements_[index];
  Mat<NFElem> p = m;
  int ord = 1;
  while (!(p == identity())) {
    p = p * m;
    ++ord;
    if (static_cast<size_t>(ord) > order())
      fail("InternalInconsistency", "element order exceeds the group order");
  }
  cached = ord;
  return ord;
}

std::vector<MatGroup::ConjClass> MatGroup::conjugacy_classes() const {
  NFElem one = NFElem::from_int(field_, 1);
  std::set<int> unseen;
  for (size_t i = 0; i < elements_.size(); ++i) unseen.insert(static_cast<int>(i));
  std::vector<ConjClass> classes;
  while (!unseen.empty()) {
    int rep = *unseen.begin();
    // Orbit of `rep` under conjugation by the generators.
    std::set<int> orbit{rep};
    std::vector<int> frontier{rep};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int i : frontier) {
        for (const auto& gen : gens_) {
          Mat<NFElem> conj = gen * elements_[i] * mat_inverse(gen, one);
          auto idx = index_of(conj);
          if (!idx)
            fail("InternalInconsistency", "conjugate left the group element list");
          if (orbit.insert(*idx).second) next.push_back(*idx);
        }
      }
      frontier = std::move(next);
    }
    for (int i : orbit) unseen.erase(i);
    int least = *orbit.begin();
    classes.push_back({least, orbit.size(), element_order(least)});
  }
  std::sort(classes.begin(), classes.end(), [](const ConjClass& a, const ConjClass& b) {
    if (a.element_order != b.element_order) return a.element_order < b.element_order;
    if (a.size != b.size) return a.size < b.size;
    return a.rep_index < b.rep_index;
  });
  return classes;
}

std::vector<int> MatGroup::center_indices() const {
  std::vector<int> out;
  for (size_t i = 0; i < elements_.size(); ++i) {
    bool central = std::all_of(gens_.begin(), gens_.end(), [&](const Mat<NFElem>& g) {
      return g * elements_[i] == elements_[i] * g;
    });
    if (central) out.push_back(static_cast<int>(i));
  }
  return out;
}

// ---------------------------------------------------------------------------

MatGroup binary_icosahedral() {
  FieldPtr K = field_zeta5();
  NFElem z = NFElem::gen(K);
  NFElem zero(K), one = NFElem::from_int(K, 1);
  NFElem alpha = z - z.pow(4);            // z - z^4
  NFElem beta = z.pow(2) - z.pow(3);      // z^2 - z^3
  NFElem sqrt5 = sqrt5_in_zeta5(K);
  NFElem inv_sqrt5 = sqrt5.inverse();

  Mat<NFElem> s(2, 2, zero);
  s.at(0, 0) = -z.pow(3);
  s.at(1, 1) = -z.pow(2);

  Mat<NFElem> t(2, 2, zero);
  t.at(0, 0) = -alpha * inv_sqrt5;
  t.at(0, 1) = beta * inv_sqrt5;
  t.at(1, 0) = beta * inv_sqrt5;
  t.at(1, 1) = alpha * inv_sqrt5;

  return MatGroup::closure(K, 2, {s, t}, 130);
}

Mat<NFElem> ternary_of(const Mat<NFElem>& g) {
  const NFElem &a = g.at(0, 0), &b = g.at(0, 1), &c = g.at(1, 0), &d = g.at(1, 1);
  NFElem zero(a.field());
  Rational two(2);
  Mat<NFElem> m(3, 3, zero);
  m.at(0, 0) = a * d + b * c;
  m.at(0, 1) = a * c;
  m.at(0, 2) = -(b * d);
  m.at(1, 0) = (a * b).scaled(two);
  m.at(1, 1) = a * a;
  m.at(1, 2) = -(b * b);
  m.at(2, 0) = -(c * d).scaled(two);
  m.at(2, 1) = -(c * c);
  m.at(2, 2) = d * d;
  return m;
}

MatGroup ternary_icosahedral(const MatGroup& binary) {
  std::vector<Mat<NFElem>> gens;
  for (const auto& g : binary.generators()) gens.push_back(ternary_of(g));
  return MatGroup::closure(binary.field(), 3, gens, 130);
}

}  // namespace icoq
