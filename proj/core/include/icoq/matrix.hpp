#pragma once

#include <string>
#include <vector>

#include "icoq/errors.hpp"
#include "icoq/poly.hpp"

namespace icoq {

// Dense matrix over an exact coefficient field C (Rational or NFElem).
template <class C>
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols, const C& fill) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Mat identity(int n, const C& one) {
    Mat m(n, n, coeff_zero(one));
    for (int i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  C& at(int i, int j) { return a_[i * cols_ + j]; }
  const C& at(int i, int j) const { return a_[i * cols_ + j]; }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) fail("NonSquare", "matrix product with mismatched shapes");
    Mat r(rows_, o.cols_, coeff_zero(a_[0]));
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const C& v = at(i, k);
        if (coeff_is_zero(v)) continue;
        for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
      }
    return r;
  }

  Mat operator+(const Mat& o) const {
    require_same_shape(o, "add");
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }

  Mat operator-(const Mat& o) const {
    require_same_shape(o, "subtract");
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
  }

  Mat operator-() const {
    Mat r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }

  Mat scaled(const C& k) const {
    Mat r = *this;
    for (auto& x : r.a_) x = x * k;
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_, a_[0]);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  C trace() const {
    if (!is_square()) fail("NonSquare", "trace of a non-square matrix");
    C t = coeff_zero(a_[0]);
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  Mat pow(long e, const C& one) const {
    if (!is_square()) fail("NonSquare", "power of a non-square matrix");
    Mat acc = identity(rows_, one);
    Mat base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      if (e >>= 1) base = base * base;
    }
    return acc;
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  // Stable content key, used for closure deduplication.
  std::string key() const {
    std::string s = std::to_string(rows_) + "x" + std::to_string(cols_) + ":";
    for (const auto& x : a_) s += coeff_body_str(x) + ";";
    return s;
  }

private:
  void require_same_shape(const Mat& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      fail("NonSquare", std::string("matrix ") + op + " with mismatched shapes");
  }

  int rows_, cols_;
  std::vector<C> a_;
};

// Gauss-Jordan elimination in place; returns the rank. Pivots are chosen as
// the first nonzero entry in each column, divisions are exact field ops.
template <class C>
int rref(Mat<C>& m) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (!coeff_is_zero(m.at(r, col))) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    C inv = m.at(rank, col);
    for (int j = 0; j < m.cols(); ++j) m.at(rank, j) = m.at(rank, j) / inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank || coeff_is_zero(m.at(r, col))) continue;
      C f = m.at(r, col);
      for (int j = 0; j < m.cols(); ++j) m.at(r, j) -= f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

template <class C>
int matrix_rank(Mat<C> m) {
  return rref(m);
}

template <class C>
Mat<C> mat_inverse(const Mat<C>& m, const C& one) {
  if (!m.is_square()) fail("NonSquare", "inverse of a non-square matrix");
  int n = m.rows();
  Mat<C> aug(n, 2 * n, coeff_zero(one));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = one;
  }
  rref(aug);
  // The identity block keeps [A | I] at full row rank no matter what A is, so
  // invertibility has to be read off the left block: it is I exactly when A
  // was invertible, since pivots are claimed column by column from the left.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const C want = (i == j) ? one : coeff_zero(one);
      if (!(aug.at(i, j) == want)) fail("DivisionByZero", "inverse of a singular matrix");
    }
  Mat<C> inv(n, n, coeff_zero(one));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

// Kronecker product.
template <class C>
Mat<C> tensor(const Mat<C>& a, const Mat<C>& b) {
  Mat<C> r(a.rows() * b.rows(), a.cols() * b.cols(), coeff_zero(a.at(0, 0)));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
  return r;
}

// Induced action on the second exterior power; basis e_i ^ e_j with i < j in
// lexicographic order of (i, j).
template <class C>
Mat<C> wedge_square(const Mat<C>& a) {
  if (!a.is_square()) fail("NonSquare", "exterior square of a non-square matrix");
  int n = a.rows();
  std::vector<std::pair<int, int>> basis;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) basis.emplace_back(i, j);
  int m = static_cast<int>(basis.size());
  Mat<C> r(m, m, coeff_zero(a.at(0, 0)));
  for (int p = 0; p < m; ++p) {
    auto [i, j] = basis[p];
    for (int q = 0; q < m; ++q) {
      auto [k, l] = basis[q];
      r.at(p, q) = a.at(i, k) * a.at(j, l) - a.at(i, l) * a.at(j, k);
    }
  }
  return r;
}

}  // namespace icoq
