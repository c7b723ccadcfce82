#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "icoq/matrix.hpp"
#include "icoq/number_field.hpp"
#include "icoq/rep.hpp"

using namespace icoq;

namespace {

Mat<Rational> rand_mat(std::mt19937& rng, int n) {
  std::uniform_int_distribution<long> d(-4, 4);
  Mat<Rational> m(n, n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Rational(d(rng));
  return m;
}

}  // namespace

TEST_CASE("rank of standard examples") {
  Mat<Rational> z(3, 3, Rational(0));
  CHECK(matrix_rank(z) == 0);
  Mat<Rational> id(3, 3, Rational(0));
  for (int i = 0; i < 3; ++i) id.at(i, i) = Rational(1);
  CHECK(matrix_rank(id) == 3);
  Mat<Rational> r(2, 3, Rational(0));
  r.at(0, 0) = Rational(1);
  r.at(0, 1) = Rational(2);
  r.at(1, 0) = Rational(2);
  r.at(1, 1) = Rational(4);  // second row is twice the first
  CHECK(matrix_rank(r) == 1);
}

TEST_CASE("inverse round-trips on random invertible matrices") {
  std::mt19937 rng(42);
  int found = 0;
  while (found < 20) {
    Mat<Rational> m = rand_mat(rng, 3);
    if (matrix_rank(m) < 3) continue;
    ++found;
    Mat<Rational> inv = mat_inverse(m, Rational(1));
    Mat<Rational> prod = m * inv;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(prod.at(i, j) == (i == j ? Rational(1) : Rational(0)));
  }
}

TEST_CASE("inverse of a singular matrix throws") {
  Mat<Rational> m(2, 2, Rational(0));
  m.at(0, 0) = Rational(1);
  m.at(1, 0) = Rational(2);  // rank 1
  CHECK_THROWS_AS(mat_inverse(m, Rational(1)), Error);
}

TEST_CASE("trace and multiplication agree with hand values") {
  Mat<Rational> a(2, 2, Rational(0));
  a.at(0, 0) = Rational(1);
  a.at(0, 1) = Rational(2);
  a.at(1, 0) = Rational(3);
  a.at(1, 1) = Rational(4);
  CHECK(a.trace() == Rational(5));
  Mat<Rational> sq = a * a;
  CHECK(sq.at(0, 0) == Rational(7));
  CHECK(sq.at(0, 1) == Rational(10));
  CHECK(sq.at(1, 0) == Rational(15));
  CHECK(sq.at(1, 1) == Rational(22));
}

TEST_CASE("tensor product dimensions and traces") {
  std::mt19937 rng(7);
  Mat<Rational> a = rand_mat(rng, 2), b = rand_mat(rng, 3);
  Mat<Rational> t = tensor(a, b);
  CHECK(t.rows() == 6);
  CHECK(t.cols() == 6);
  CHECK(t.trace() == a.trace() * b.trace());
}

TEST_CASE("wedge square of a 2x2 matrix is its determinant") {
  std::mt19937 rng(8);
  for (int i = 0; i < 10; ++i) {
    Mat<Rational> a = rand_mat(rng, 2);
    Mat<Rational> w = wedge_square(a);
    CHECK(w.rows() == 1);
    Rational det = a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0);
    CHECK(w.at(0, 0) == det);
  }
}

TEST_CASE("monomial basis sizes follow the stars-and-bars count") {
  CHECK(monomial_basis(2, 5).size() == 6);
  CHECK(monomial_basis(3, 4).size() == 15);
  CHECK(monomial_basis(3, 0).size() == 1);
  // grevlex-descending: pure power of the first variable leads
  auto basis = monomial_basis(3, 3);
  CHECK(basis.front() == ExpVec{3, 0, 0});
  CHECK(basis.back() == ExpVec{0, 0, 3});
}

TEST_CASE("symmetric powers are multiplicative: 200 random pairs") {
  std::mt19937 rng(20250202);
  for (int k = 2; k <= 3; ++k) {
    for (int rep = 0; rep < 100; ++rep) {
      Mat<Rational> a = rand_mat(rng, 3), b = rand_mat(rng, 3);
      Mat<Rational> lhs = sym_power_matrix(a * b, k);
      Mat<Rational> rhs = sym_power_matrix(a, k) * sym_power_matrix(b, k);
      CHECK(lhs.rows() == rhs.rows());
      bool equal = true;
      for (int i = 0; i < lhs.rows() && equal; ++i)
        for (int j = 0; j < lhs.cols() && equal; ++j)
          equal = lhs.at(i, j) == rhs.at(i, j);
      CHECK(equal);
    }
  }
}

TEST_CASE("symmetric power at k=1 is the matrix itself") {
  std::mt19937 rng(5);
  Mat<Rational> a = rand_mat(rng, 3);
  Mat<Rational> s = sym_power_matrix(a, 1);
  bool equal = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (s.at(i, j) != a.at(i, j)) equal = false;
  CHECK(equal);
}

TEST_CASE("symmetric power over a number field") {
  FieldPtr f = field_sqrt5();
  NFElem s = NFElem::gen(f);
  Mat<NFElem> m(2, 2, NFElem(f));
  m.at(0, 0) = s;
  m.at(1, 1) = s;
  Mat<NFElem> p = sym_power_matrix(m, 2);
  // diag(s, s) on x^2, xy, y^2 acts by s^2 = 5
  for (int i = 0; i < 3; ++i) CHECK(p.at(i, i) == NFElem::from_int(f, 5));
}
