#include "icoq/klein.hpp"

#include <cstddef>
#include <utility>

#include "icoq/rep.hpp"

namespace icoq {

MultiPoly<NFElem> reynolds(const MatGroup& g, const MultiPoly<NFElem>& p) {
  if (p.nvars() != g.dim())
    fail("RegistryMismatch", "polynomial registry does not match the group dimension");
  MultiPoly<NFElem> sum = MultiPoly<NFElem>::zero(p.registry(), p.one());
  for (const auto& m : g.elements()) sum += compose_linear(p, m);
  return sum.scaled(NFElem::from_int(g.field(), static_cast<long>(g.order())).inverse());
}

namespace {

void pin(bool ok, const std::string& detail) {
  if (!ok) fail("PinFailure", detail);
}

bool all_integer(const MultiPoly<Rational>& p) {
  for (const auto& [e, c] : p.terms())
    if (!c.is_integer()) return false;
  return true;
}

}  // namespace

KleinPackage klein_construct() {
  const std::vector<std::string> x = {"x0", "x1", "x2"};
  auto z2 = qparse(x, "x0^2 + x1*x2");
  auto z6 = qparse(x, "8*x0^4*x1*x2 - x0*x1^5 - 2*x0^2*x1^2*x2^2 + x1^3*x2^3 - x0*x2^5");

  MultiPoly<Rational> hbar = bordered_hessian_det(z6, z2, x);
  auto z10 = (z2.pow(5).scaled(Rational(256)) - hbar -
              (z2.pow(2) * z6).scaled(Rational(480)))
                 .scaled(Rational(-1, 25));
  auto z15 = jacobian_det<Rational>({z6, z2, z10}, x).scaled(Rational(1, 10));

  const std::vector<std::string> z = {"z2", "z6", "z10"};
  auto v2 = MultiPoly<Rational>::variable(z, Rational(1), "z2");
  auto v6 = MultiPoly<Rational>::variable(z, Rational(1), "z6");
  auto v10 = MultiPoly<Rational>::variable(z, Rational(1), "z10");
  MultiPoly<Rational> bracket = v6.pow(2).scaled(Rational(5)) - v2 * v10;
  auto phi_formal = v6.pow(5).scaled(Rational(-1728)) + v10.pow(3) +
                    (v2 * v6.pow(3) * v10).scaled(Rational(720)) -
                    (v2.pow(2) * v6 * v10.pow(2)).scaled(Rational(80)) +
                    (v2.pow(3) * bracket.pow(2)).scaled(Rational(64));

  std::map<std::string, MultiPoly<Rational>> images = {
      {"z2", z2}, {"z6", z6}, {"z10", z10}};
  auto phi_expanded = phi_formal.subst(images);
  auto residue = z15 * z15 - phi_expanded;
  KleinPackage k{std::move(z2),         std::move(z6),           std::move(z10),
                 std::move(z15),        std::move(phi_formal),   std::move(phi_expanded),
                 std::move(residue)};

  pin(k.z2.term_count() == 2, "z2 must have 2 terms");
  pin(k.z6.term_count() == 5, "z6 must have 5 terms");
  pin(k.z10.term_count() == 12, "z10 must have 12 terms");
  pin(k.z15.term_count() == 20, "z15 must have 20 terms");
  pin(all_integer(k.z10) && all_integer(k.z15),
      "z10 and z15 must have integral coefficients");
  pin(k.z2.total_degree() == 2 && k.z6.total_degree() == 6 &&
          k.z10.total_degree() == 10 && k.z15.total_degree() == 15,
      "invariant degrees must be 2, 6, 10, 15");
  WeightedDegree w = k.phi_formal.weighted_degree({2, 6, 10});
  pin(w.homogeneous && w.degree == 30,
      "the formal degree-30 relation must be weighted-homogeneous");
  pin(k.relation_residue.is_zero(), "z15^2 must equal the degree-30 relation");
  return k;
}

void verify_ternary_pins(const MatGroup& ternary, const KleinPackage& k) {
  pin(ternary.order() == 60, "ternary group must have order 60");
  pin(ternary.generators().size() == 2, "ternary group must carry two generators");
  const Mat<NFElem>& s = ternary.generators()[0];
  const Mat<NFElem>& t = ternary.generators()[1];
  auto order_of = [&](const Mat<NFElem>& m) {
    auto idx = ternary.index_of(m);
    pin(idx.has_value(), "generator product must lie in the group");
    return ternary.element_order(*idx);
  };
  pin(order_of(s) == 5, "first ternary generator must have order 5");
  pin(order_of(t) == 2, "second ternary generator must have order 2");
  pin(order_of(s * t) == 3, "generator product must have order 3");

  MultiPoly<NFElem> z2 = promote(k.z2, ternary.field());
  MultiPoly<NFElem> z6 = promote(k.z6, ternary.field());
  for (const auto& g : ternary.generators()) {
    pin(compose_linear(z2, g) == z2, "z2 must be invariant under the generators");
    pin(compose_linear(z6, g) == z6, "z6 must be invariant under the generators");
  }
}

BinaryInvariant binary_degree12_invariant(const MatGroup& binary) {
  const FieldPtr& field = binary.field();
  const std::vector<std::string> x = {"x1", "x2"};
  MultiPoly<NFElem> seed = MultiPoly<NFElem>::monomial(
      x, NFElem::from_int(field, 1), ExpVec{11, 1}, NFElem::from_int(field, 1));
  MultiPoly<NFElem> av = reynolds(binary, seed);
  NFElem lead = av.coeff(ExpVec{11, 1});
  if (lead.is_zero())
    fail("WrongInvariantDimension", "group average of the degree-12 seed vanished");
  av = av.scaled(lead.inverse());

  BinaryInvariant out{qpoly(x), 0};
  for (const auto& [e, c] : av.terms()) {
    if (!c.is_rational())
      fail("InternalInconsistency", "normalized degree-12 invariant has irrational coefficients");
    out.h12.add_term(e, c.rational_part());
  }
  if (!all_integer(out.h12))
    fail("InternalInconsistency", "normalized degree-12 invariant has fractional coefficients");
  for (const auto& g : binary.generators())
    if (!(compose_linear(promote(out.h12, field), g) == promote(out.h12, field)))
      fail("PinFailure", "degree-12 invariant must be fixed by the generators");

  std::vector<long> dims = invariant_dims_linear(binary, 12);
  out.invariant_dimension = dims.at(12);
  if (out.invariant_dimension != 1)
    fail("WrongInvariantDimension", "degree-12 invariants must form a line");
  return out;
}

std::vector<long> invariant_dims_linear(const MatGroup& g, int dmax) {
  const int n = g.dim();
  const FieldPtr& field = g.field();
  NFElem zero = NFElem::from_int(field, 0);
  NFElem one = NFElem::from_int(field, 1);

  std::vector<Mat<NFElem>> diag_gens, general_gens;
  for (const auto& m : g.generators()) {
    bool is_diag = true;
    for (int i = 0; i < n && is_diag; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && !m.at(i, j).is_zero()) {
          is_diag = false;
          break;
        }
    (is_diag ? diag_gens : general_gens).push_back(m);
  }

  std::vector<std::string> vars;
  vars.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) vars.push_back("u" + std::to_string(i));

  std::vector<long> dims;
  for (int d = 0; d <= dmax; ++d) {
    auto basis = monomial_basis(n, d);
    std::map<ExpVec, int, GrevlexLess> where;
    for (size_t i = 0; i < basis.size(); ++i) where.emplace(basis[i], static_cast<int>(i));

    // A diagonal generator sends each monomial to a scalar multiple of
    // itself, so its fixed subspace is spanned by the monomials with
    // eigenvalue one.
    std::vector<int> pruned;
    for (size_t q = 0; q < basis.size(); ++q) {
      bool keep = true;
      for (const auto& m : diag_gens) {
        NFElem scale = one;
        for (int i = 0; i < n; ++i)
          if (basis[q][i] > 0) scale = scale * m.at(i, i).pow(basis[q][i]);
        if (!(scale == one)) {
          keep = false;
          break;
        }
      }
      if (keep) pruned.push_back(static_cast<int>(q));
    }

    if (general_gens.empty() || pruned.empty()) {
      dims.push_back(static_cast<long>(pruned.size()));
      continue;
    }

    // Stack (S_d(m) - I) v = 0 over the pruned columns for every remaining
    // generator; the joint kernel is exactly the degree-d invariant space.
    size_t rows = general_gens.size() * basis.size();
    Mat<NFElem> stack(static_cast<int>(rows), static_cast<int>(pruned.size()), zero);
    int row_base = 0;
    for (const auto& m : general_gens) {
      std::vector<MultiPoly<NFElem>> linform;
      for (int i = 0; i < n; ++i) {
        MultiPoly<NFElem> f = MultiPoly<NFElem>::zero(vars, one);
        for (int j = 0; j < n; ++j) {
          ExpVec e(static_cast<size_t>(n), 0);
          e[j] = 1;
          f.add_term(std::move(e), m.at(i, j));
        }
        linform.push_back(std::move(f));
      }
      for (size_t c = 0; c < pruned.size(); ++c) {
        const ExpVec& e = basis[static_cast<size_t>(pruned[c])];
        MultiPoly<NFElem> image = MultiPoly<NFElem>::constant(vars, one, one);
        for (int i = 0; i < n; ++i)
          if (e[i] > 0) image *= linform[i].pow(static_cast<unsigned long>(e[i]));
        for (const auto& [ee, cc] : image.terms())
          stack.at(row_base + where.at(ee), static_cast<int>(c)) = cc;
        stack.at(row_base + pruned[c], static_cast<int>(c)) =
            stack.at(row_base + pruned[c], static_cast<int>(c)) - one;
      }
      row_base += static_cast<int>(basis.size());
    }
    dims.push_back(static_cast<long>(pruned.size()) - matrix_rank(stack));
  }
  return dims;
}

}  // namespace icoq
