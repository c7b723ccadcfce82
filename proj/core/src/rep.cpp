#include "icoq/rep.hpp"

#include <algorithm>

namespace icoq {

std::vector<ExpVec> monomial_basis(int n, int k) {
  std::vector<ExpVec> out;
  ExpVec cur(n, 0);
  // Recursive enumeration, then grevlex-descending sort for a stable layout.
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      cur[pos] = static_cast<unsigned>(left);
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[pos] = static_cast<unsigned>(v);
      rec(pos + 1, left - v);
    }
  };
  rec(0, k);
  GrevlexLess less;
  std::sort(out.begin(), out.end(), [&](const ExpVec& a, const ExpVec& b) { return less(b, a); });
  return out;
}

// ---------------------------------------------------------------------------
// symmetric-group representations

QRep rep_trivial() {
  return {"W1", 1, [](const Perm&) { return Mat<Rational>::identity(1, Rational(1)); }};
}

QRep rep_sign() {
  return {"W1'", 1, [](const Perm& p) {
            Mat<Rational> m(1, 1, Rational(p.even() ? 1 : -1));
            return m;
          }};
}

QRep rep_standard(int degree) {
  int n = degree - 1;
  return {"W4", n, [n, degree](const Perm& p) {
            Mat<Rational> m(n, n, Rational(0));
            // image of f_i = e_i - e_last is f_{p(i)} - f_{p(last)} with f_last = 0
            int plast = p.apply(degree - 1);
            for (int i = 0; i < n; ++i) {
              int pi = p.apply(i);
              if (pi < n) m.at(pi, i) += Rational(1);
              if (plast < n) m.at(plast, i) -= Rational(1);
            }
            return m;
          }};
}

QRep rep_tensor_sign(std::string label, const QRep& r) {
  auto base = r.of;
  return {std::move(label), r.dim, [base](const Perm& p) {
            Mat<Rational> m = base(p);
            return p.even() ? m : m.scaled(Rational(-1));
          }};
}

QRep rep_wedge2(std::string label, const QRep& r) {
  auto base = r.of;
  int d = r.dim * (r.dim - 1) / 2;
  return {std::move(label), d, [base](const Perm& p) { return wedge_square(base(p)); }};
}

namespace {

// Solve B * M = Y exactly for a full-column-rank B.
Mat<Rational> solve_exact(const Mat<Rational>& b, const Mat<Rational>& y) {
  int rows = b.rows(), cols = b.cols(), ycols = y.cols();
  Mat<Rational> aug(rows, cols + ycols, Rational(0));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug.at(i, j) = b.at(i, j);
    for (int j = 0; j < ycols; ++j) aug.at(i, cols + j) = y.at(i, j);
  }
  if (rref(aug) != cols)
    fail("InternalInconsistency", "projector basis lost rank while solving");
  Mat<Rational> m(cols, ycols, Rational(0));
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < ycols; ++j) m.at(i, j) = aug.at(i, cols + j);
  // Rows beyond the pivot block must have vanished.
  for (int i = cols; i < rows; ++i)
    for (int j = 0; j < ycols; ++j)
      if (!aug.at(i, cols + j).is_zero())
        fail("InternalInconsistency", "projector image left the subspace");
  return m;
}

}  // namespace

QRep rep_sym2_complement(std::string label, const PermGroup& g, const QRep& base) {
  int n = base.dim;
  int sdim = n * (n + 1) / 2;
  Mat<Rational> zero(sdim, sdim, Rational(0));
  Mat<Rational> sum1 = zero, sum4 = zero;
  for (const auto& p : g.elements()) {
    Mat<Rational> s2 = sym_power_matrix(base.of(p), 2);
    sum1 = sum1 + s2;
    sum4 = sum4 + s2.scaled(base.of(p).trace());
  }
  Mat<Rational> pi1 = sum1.scaled(Rational(BigInt(1), BigInt(static_cast<long long>(g.order()))));
  Mat<Rational> pi4 =
      sum4.scaled(Rational(BigInt(base.dim), BigInt(static_cast<long long>(g.order()))));
  Mat<Rational> pi5 = Mat<Rational>::identity(sdim, Rational(1)) - pi1 - pi4;
  // Basis of the image: pivot columns of pi5.
  std::vector<int> pivots;
  {
    Mat<Rational> r = pi5;
    int rank = 0;
    for (int col = 0; col < r.cols() && rank < r.rows(); ++col) {
      int piv = -1;
      for (int row = rank; row < r.rows(); ++row)
        if (!r.at(row, col).is_zero()) {
          piv = row;
          break;
        }
      if (piv < 0) continue;
      if (piv != rank)
        for (int j = 0; j < r.cols(); ++j) std::swap(r.at(piv, j), r.at(rank, j));
      Rational inv2 = r.at(rank, col);
      for (int j = 0; j < r.cols(); ++j) r.at(rank, j) /= inv2;
      for (int row = 0; row < r.rows(); ++row) {
        if (row == rank || r.at(row, col).is_zero()) continue;
        Rational f = r.at(row, col);
        for (int j = 0; j < r.cols(); ++j) r.at(row, j) -= f * r.at(rank, j);
      }
      pivots.push_back(col);
      ++rank;
    }
  }
  int wdim = static_cast<int>(pivots.size());
  Mat<Rational> basis(sdim, wdim, Rational(0));
  for (int j = 0; j < wdim; ++j)
    for (int i = 0; i < sdim; ++i) basis.at(i, j) = pi5.at(i, pivots[j]);
  auto baseof = base.of;
  return {std::move(label), wdim, [baseof, basis](const Perm& p) {
            Mat<Rational> s2 = sym_power_matrix(baseof(p), 2);
            return solve_exact(basis, s2 * basis);
          }};
}

std::vector<QRep> s5_irreps(const PermGroup& s5) {
  QRep w1 = rep_trivial();
  QRep w1p = rep_sign();
  QRep w4 = rep_standard(5);
  QRep w4p = rep_tensor_sign("W4'", w4);
  QRep w6 = rep_wedge2("W6", w4);
  QRep w5 = rep_sym2_complement("W5", s5, w4);
  QRep w5p = rep_tensor_sign("W5'", w5);
  return {w1, w1p, w4, w4p, w6, w5, w5p};
}

std::vector<Rational> character(const QRep& r,
                                const std::vector<PermGroup::ConjClass>& classes) {
  std::vector<Rational> out;
  for (const auto& c : classes) out.push_back(r.of(c.rep).trace());
  return out;
}

// ---------------------------------------------------------------------------
// binary-group representations

NFElem galois_shift(const NFElem& e) {
  const FieldPtr& k = e.field();
  NFElem g2 = NFElem::gen(k).pow(2);
  NFElem acc(k);
  const auto& coords = e.coords();
  for (size_t i = coords.size(); i-- > 0;) acc = acc * g2 + NFElem::from_rational(k, coords[i]);
  return acc;
}

Mat<NFElem> galois_shift_mat(const Mat<NFElem>& m) {
  Mat<NFElem> r = m;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = galois_shift(m.at(i, j));
  return r;
}

std::vector<NFRep> binary_irreps(const FieldPtr& field) {
  NFElem one = NFElem::from_int(field, 1);
  std::vector<NFRep> reps;
  reps.push_back({"V1", 1, [one](const Mat<NFElem>&) { return Mat<NFElem>::identity(1, one); }});
  reps.push_back({"V2", 2, [](const Mat<NFElem>& g) { return g; }});
  reps.push_back({"V2'", 2, [](const Mat<NFElem>& g) { return galois_shift_mat(g); }});
  reps.push_back({"V3", 3, [](const Mat<NFElem>& g) { return ternary_of(g); }});
  reps.push_back({"V3'", 3, [](const Mat<NFElem>& g) { return ternary_of(galois_shift_mat(g)); }});
  reps.push_back({"V4", 4, [](const Mat<NFElem>& g) { return sym_power_matrix(g, 3); }});
  reps.push_back({"V4'", 4, [](const Mat<NFElem>& g) { return tensor(g, galois_shift_mat(g)); }});
  reps.push_back({"V5", 5, [](const Mat<NFElem>& g) { return sym_power_matrix(g, 4); }});
  reps.push_back({"V6", 6, [](const Mat<NFElem>& g) { return sym_power_matrix(g, 5); }});
  return reps;
}

BinaryClassLayout binary_class_layout(const MatGroup& g) {
  auto classes = g.conjugacy_classes();
  const FieldPtr& k = g.field();
  NFElem z = NFElem::gen(k);
  NFElem golden = z + z.pow(4);  // (-1 + sqrt5)/2, the positive-embedding value
  // Reference column order by element order; the two order-5 and order-10
  // classes are split by the defining trace.
  std::vector<int> target_orders{1, 2, 4, 5, 5, 10, 10, 6, 3};
  BinaryClassLayout layout;
  for (size_t slot = 0; slot < target_orders.size(); ++slot) {
    int want = target_orders[slot];
    std::vector<const MatGroup::ConjClass*> found;
    for (const auto& c : classes)
      if (c.element_order == want) found.push_back(&c);
    if (found.empty()) fail("InternalInconsistency", "missing class of element order " +
                                                         std::to_string(want));
    const MatGroup::ConjClass* pick = nullptr;
    if (found.size() == 1) {
      pick = found[0];
    } else {
      // First slot of the pair: defining trace (z + z^4) for order 5,
      // -(z + z^4) for order 10.
      NFElem want_first = (want == 5) ? golden : -golden;
      bool is_first_slot = (slot == 3 || slot == 5);
      for (auto* c : found) {
        bool matches = g.elements()[c->rep_index].trace() == want_first;
        if (matches == is_first_slot) {
          pick = c;
          break;
        }
      }
    }
    if (!pick) fail("InternalInconsistency", "could not disambiguate class layout");
    layout.rep_indices.push_back(pick->rep_index);
    layout.sizes.push_back(pick->size);
    layout.orders.push_back(pick->element_order);
  }
  return layout;
}

std::vector<NFElem> nf_character(const NFRep& r, const MatGroup& g,
                                 const std::vector<int>& class_rep_indices) {
  std::vector<NFElem> out;
  for (int idx : class_rep_indices) out.push_back(r.of(g.elements()[idx]).trace());
  return out;
}

// ---------------------------------------------------------------------------
// Molien series

std::vector<long> molien_dims(const std::vector<Mat<NFElem>>& class_reps,
                              const std::vector<size_t>& class_sizes, size_t group_order,
                              int dmax) {
  if (class_reps.empty() || class_reps.size() != class_sizes.size())
    fail("GroupMismatch", "class data lengths disagree");
  const FieldPtr& field = class_reps[0].at(0, 0).field();
  NFElem one = NFElem::from_int(field, 1);
  // For each class, complete homogeneous sums h_d via Newton's recursion with
  // power sums p_k = tr(g^k).
  std::vector<std::vector<NFElem>> h(class_reps.size());
  for (size_t c = 0; c < class_reps.size(); ++c) {
    const Mat<NFElem>& m = class_reps[c];
    std::vector<NFElem> p(dmax + 1, NFElem(field));
    Mat<NFElem> power = m;
    for (int k = 1; k <= dmax; ++k) {
      p[k] = power.trace();
      if (k < dmax) power = power * m;
    }
    h[c].assign(dmax + 1, NFElem(field));
    h[c][0] = one;
    for (int d = 1; d <= dmax; ++d) {
      NFElem acc(field);
      for (int k = 1; k <= d; ++k) acc += p[k] * h[c][d - k];
      h[c][d] = acc.scaled(Rational(BigInt(1), BigInt(d)));
    }
  }
  std::vector<long> dims;
  for (int d = 0; d <= dmax; ++d) {
    NFElem total(field);
    for (size_t c = 0; c < class_reps.size(); ++c)
      total += h[c][d].scaled(Rational(BigInt(static_cast<long long>(class_sizes[c])), BigInt(1)));
    NFElem avg = total.scaled(Rational(BigInt(1), BigInt(static_cast<long long>(group_order))));
    if (!avg.is_rational() || !avg.rational_part().is_integer())
      fail("NonIntegralDimension",
           "Molien dimension in degree " + std::to_string(d) + " is " + avg.str());
    dims.push_back(avg.rational_part().numerator().convert_to<long>());
  }
  return dims;
}

std::vector<long> series_coeffs(const std::vector<int>& denom_degrees, int numer_shift,
                                int dmax) {
  std::vector<long> c(dmax + 1, 0);
  c[0] = 1;
  if (numer_shift > 0 && numer_shift <= dmax) c[numer_shift] += 1;
  for (int d : denom_degrees)
    for (int i = d; i <= dmax; ++i) c[i] += c[i - d];
  return c;
}

// ---------------------------------------------------------------------------
// tables

QCharTable s5_character_table(const PermGroup& s5) {
  auto classes = s5.conjugacy_classes();
  // Reference column order by (element order, class size).
  std::vector<std::pair<int, size_t>> want{{1, 1},  {2, 10}, {2, 15}, {3, 20},
                                           {6, 20}, {4, 30}, {5, 24}};
  QCharTable t;
  std::vector<PermGroup::ConjClass> ordered;
  for (auto [o, s] : want) {
    bool hit = false;
    for (const auto& c : classes)
      if (c.element_order == o && c.size == s) {
        ordered.push_back(c);
        hit = true;
        break;
      }
    if (!hit)
      fail("GroupMismatch", "expected a class of order " + std::to_string(o) + " and size " +
                                std::to_string(s));
  }
  for (const auto& c : ordered) {
    t.class_labels.push_back(c.rep.cycle_string());
    t.class_sizes.push_back(c.size);
    t.class_orders.push_back(c.element_order);
    t.class_reps.push_back(c.rep);
  }
  for (const auto& r : s5_irreps(s5)) {
    t.row_labels.push_back(r.label);
    t.rows.push_back(character(r, ordered));
  }
  return t;
}

NFCharTable binary_character_table(const MatGroup& g) {
  auto layout = binary_class_layout(g);
  NFCharTable t;
  t.class_sizes = layout.sizes;
  t.class_orders = layout.orders;
  t.class_rep_indices = layout.rep_indices;
  for (const auto& r : binary_irreps(g.field())) {
    t.row_labels.push_back(r.label);
    t.rows.push_back(nf_character(r, g, layout.rep_indices));
  }
  return t;
}

bool q_table_orthonormal(const PermGroup& g, const QCharTable& t,
                         const std::vector<QRep>& reps) {
  size_t nc = t.class_reps.size();
  for (size_t i = 0; i < reps.size(); ++i) {
    for (size_t j = 0; j < reps.size(); ++j) {
      Rational acc(0);
      for (size_t c = 0; c < nc; ++c) {
        Rational left = t.rows[i][c];
        Rational right = reps[j].of(t.class_reps[c].inverse()).trace();
        acc += Rational(BigInt(static_cast<long long>(t.class_sizes[c])), BigInt(1)) * left * right;
      }
      acc /= Rational(static_cast<long long>(g.order()));
      if (acc != Rational(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

bool nf_table_orthonormal(const MatGroup& g, const NFCharTable& t,
                          const std::vector<NFRep>& reps) {
  const FieldPtr& k = g.field();
  NFElem one = NFElem::from_int(k, 1);
  size_t nc = t.class_rep_indices.size();
  for (size_t i = 0; i < reps.size(); ++i) {
    for (size_t j = 0; j < reps.size(); ++j) {
      NFElem acc(k);
      for (size_t c = 0; c < nc; ++c) {
        const Mat<NFElem>& rep_el = g.elements()[t.class_rep_indices[c]];
        Mat<NFElem> inv = mat_inverse(rep_el, one);
        NFElem right = reps[j].of(inv).trace();
        acc += (t.rows[i][c] * right)
                   .scaled(Rational(BigInt(static_cast<long long>(t.class_sizes[c])), BigInt(1)));
      }
      acc = acc.scaled(Rational(BigInt(1), BigInt(static_cast<long long>(g.order()))));
      NFElem want = (i == j) ? one : NFElem(k);
      if (!(acc == want)) return false;
    }
  }
  return true;
}

LefschetzTable lefschetz_table(const PermGroup& s5) {
  QCharTable t = s5_character_table(s5);
  QRep w4 = rep_standard(5);
  LefschetzTable lt;
  lt.class_labels = t.class_labels;
  lt.class_sizes = t.class_sizes;
  for (size_t c = 0; c < t.class_reps.size(); ++c) {
    Rational chi = w4.of(t.class_reps[c]).trace();
    lt.pic_traces.push_back(chi + Rational(1));
    lt.lefschetz.push_back(chi + Rational(3));
  }
  return lt;
}

}  // namespace icoq
