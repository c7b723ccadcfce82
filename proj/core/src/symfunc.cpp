#include "icoq/symfunc.hpp"

#include <map>

namespace icoq {

std::vector<std::string> root_vars(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

std::vector<std::string> esym_vars(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("z" + std::to_string(i));
  return v;
}

MultiPoly<Rational> elementary_symmetric(int k, int n) {
  if (k < 0 || k > n) fail("IndexOutOfRange", "elementary symmetric index out of range");
  auto vars = root_vars(n);
  MultiPoly<Rational> out = qpoly(vars);
  // Iterate over all k-subsets of {0..n-1}.
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k == 0) return MultiPoly<Rational>::constant(vars, Rational(1), Rational(1));
  for (;;) {
    ExpVec e(n, 0);
    for (int i : idx) e[i] = 1;
    out.add_term(std::move(e), Rational(1));
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

MultiPoly<Rational> permute_vars(const MultiPoly<Rational>& p, const std::vector<int>& images) {
  const auto& vars = p.registry();
  if (images.size() != vars.size())
    fail("RegistryMismatch", "permutation length does not match registry size");
  std::map<std::string, MultiPoly<Rational>> assign;
  for (size_t i = 0; i < vars.size(); ++i)
    assign.emplace(vars[i],
                   MultiPoly<Rational>::variable(vars, Rational(1), vars[images[i]]));
  return p.subst(assign);
}

bool is_symmetric(const MultiPoly<Rational>& p) {
  int n = p.nvars();
  if (n <= 1) return true;
  std::vector<int> swap01(n), cycle(n);
  for (int i = 0; i < n; ++i) swap01[i] = i, cycle[i] = (i + 1) % n;
  std::swap(swap01[0], swap01[1]);
  return permute_vars(p, swap01) == p && permute_vars(p, cycle) == p;
}

MultiPoly<Rational> vandermonde_product(int n) {
  auto vars = root_vars(n);
  MultiPoly<Rational> prod = MultiPoly<Rational>::constant(vars, Rational(1), Rational(1));
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      MultiPoly<Rational> diff = MultiPoly<Rational>::variable(vars, Rational(1), vars[i]) -
                                 MultiPoly<Rational>::variable(vars, Rational(1), vars[j]);
      prod *= diff;
    }
  return prod;
}

namespace {

// Lexicographic leading term (x1 dominates).
std::pair<ExpVec, Rational> lex_leading(const MultiPoly<Rational>& p) {
  LexLess less;
  const ExpVec* best = nullptr;
  const Rational* coeff = nullptr;
  for (const auto& [e, c] : p.terms()) {
    if (!best || less(*best, e)) {
      best = &e;
      coeff = &c;
    }
  }
  return {*best, *coeff};
}

}  // namespace

MultiPoly<Rational> to_elementary(const MultiPoly<Rational>& p, long* steps_out) {
  int n = p.nvars();
  if (!is_symmetric(p))
    fail("NotSymmetric", "input is not invariant under variable permutations");
  std::vector<MultiPoly<Rational>> e;  // e[k] = k-th elementary symmetric
  for (int k = 0; k <= n; ++k) e.push_back(elementary_symmetric(k, n));
  auto zvars = esym_vars(n);
  MultiPoly<Rational> out = qpoly(zvars);
  MultiPoly<Rational> rem = p;
  long steps = 0;
  while (!rem.is_zero()) {
    auto [lead, c] = lex_leading(rem);
    for (int i = 0; i + 1 < n; ++i)
      if (lead[i] < lead[i + 1])
        fail("NotSymmetric", "leading exponent is not weakly decreasing");
    // c * e1^(a1-a2) * e2^(a2-a3) * ... * en^(an)
    ExpVec ze(n, 0);
    MultiPoly<Rational> sub = MultiPoly<Rational>::constant(p.registry(), Rational(1), c);
    for (int i = 0; i < n; ++i) {
      unsigned k = (i + 1 < n) ? lead[i] - lead[i + 1] : lead[i];
      ze[i] = k;
      if (k > 0) sub *= e[i + 1].pow(k);
    }
    out.add_term(std::move(ze), c);
    rem -= sub;
    ++steps;
  }
  if (steps_out) *steps_out = steps;
  return out;
}

DiscriminantSuite quintic_discriminant() {
  DiscriminantSuite s{5,
                      {},
                      vandermonde_product(5),
                      qpoly(root_vars(5)),
                      qpoly(esym_vars(5)),
                      qpoly({"z2", "z3", "z4", "z5"}),
                      qpoly({"z3", "z4", "z5"}),
                      qpoly({"z4", "z5"}),
                      0};
  for (int k = 1; k <= s.n; ++k) s.e.push_back(elementary_symmetric(k, s.n));
  s.square = s.vandermonde * s.vandermonde;
  s.delta = to_elementary(s.square, &s.reduction_steps);

  // psi: set z1 = 0 and re-express in z2..z5.
  std::vector<std::string> psi_vars{"z2", "z3", "z4", "z5"};
  std::map<std::string, MultiPoly<Rational>> down;
  down.emplace("z1", MultiPoly<Rational>::zero(psi_vars, Rational(1)));
  for (const auto& v : psi_vars)
    down.emplace(v, MultiPoly<Rational>::variable(psi_vars, Rational(1), v));
  s.psi = s.delta.subst(down);

  // upsilon: additionally z2 = 0, leaving z3, z4, z5.
  std::vector<std::string> ups_vars{"z3", "z4", "z5"};
  std::map<std::string, MultiPoly<Rational>> down2;
  down2.emplace("z2", MultiPoly<Rational>::zero(ups_vars, Rational(1)));
  for (const auto& v : ups_vars)
    down2.emplace(v, MultiPoly<Rational>::variable(ups_vars, Rational(1), v));
  s.upsilon = s.psi.subst(down2);

  // chart z3 = 1 in z4, z5.
  std::vector<std::string> chart_vars{"z4", "z5"};
  std::map<std::string, MultiPoly<Rational>> chart;
  chart.emplace("z3", MultiPoly<Rational>::constant(chart_vars, Rational(1), Rational(1)));
  for (const auto& v : chart_vars)
    chart.emplace(v, MultiPoly<Rational>::variable(chart_vars, Rational(1), v));
  s.upsilon_chart = s.upsilon.subst(chart);
  return s;
}

}  // namespace icoq
