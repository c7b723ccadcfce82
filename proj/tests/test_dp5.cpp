#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "icoq/dp5.hpp"
#include "icoq/fixtures.hpp"

using namespace icoq;

namespace {

const IncidenceModel& model() {
  static IncidenceModel m = dp5_build();
  return m;
}

std::set<Cls> as_set(const std::vector<Cls>& v) { return std::set<Cls>(v.begin(), v.end()); }

// Exhaustive enumeration over a certified coefficient box: Cauchy-Schwarz on
// the e1..e4 part pins the e0 coefficient range and the per-coordinate bound,
// so nothing outside the box can satisfy the numerics.
std::set<Cls> enumerate_classes(long self, long degree, long c0_lo, long c0_hi, long rad) {
  std::set<Cls> out;
  for (long c0 = c0_lo; c0 <= c0_hi; ++c0)
    for (long c1 = -rad; c1 <= rad; ++c1)
      for (long c2 = -rad; c2 <= rad; ++c2)
        for (long c3 = -rad; c3 <= rad; ++c3)
          for (long c4 = -rad; c4 <= rad; ++c4) {
            Cls c{c0, c1, c2, c3, c4};
            if (cls_dot(c, c) != self) continue;
            if (cls_dot(cls_neg(canonical_class()), c) != degree) continue;
            out.insert(c);
          }
  return out;
}

}  // namespace

TEST_CASE("intersection form and the canonical class") {
  Cls e0{1, 0, 0, 0, 0}, e1{0, 1, 0, 0, 0};
  CHECK(cls_dot(e0, e0) == 1);
  CHECK(cls_dot(e1, e1) == -1);
  CHECK(cls_dot(e0, e1) == 0);
  Cls k = canonical_class();
  CHECK(k == Cls{-3, 1, 1, 1, 1});
  CHECK(cls_dot(k, k) == 5);
  CHECK(cls_add(k, cls_neg(k)) == Cls{0, 0, 0, 0, 0});
}

TEST_CASE("class counts") {
  const IncidenceModel& m = model();
  CHECK(m.lines.size() == 10);
  CHECK(m.conics.size() == 5);
  CHECK(m.cubics.size() == 5);
  CHECK(m.xi.size() == 15);
  Cls k = canonical_class();
  for (const Cls& l : m.lines) {
    CHECK(cls_dot(l, l) == -1);
    CHECK(cls_dot(k, l) == -1);
  }
  for (const Cls& c : m.conics) {
    CHECK(cls_dot(c, c) == 0);
    CHECK(cls_dot(cls_neg(k), c) == 2);
  }
  for (const Cls& r : m.cubics) {
    CHECK(cls_dot(r, r) == 1);
    CHECK(cls_dot(cls_neg(k), r) == 3);
  }
}

TEST_CASE("certified boxes reproduce the enumeration") {
  const IncidenceModel& m = model();
  // lines: c0^2 - sum ci^2 = -1 and 3 c0 + sum ci = 1; Cauchy-Schwarz gives
  // 5 c0^2 - 6 c0 - 3 <= 0, so c0 in {0, 1} and each |ci| <= 1
  CHECK(enumerate_classes(-1, 1, 0, 1, 1) == as_set(m.lines));
  // conics: 5 c0^2 - 12 c0 + 4 <= 0, so c0 in {1, 2} and each |ci| <= 2
  CHECK(enumerate_classes(0, 2, 1, 2, 2) == as_set(m.conics));
  // cubics: 5 c0^2 - 18 c0 + 13 <= 0, so c0 in {1, 2} and each |ci| <= 1
  CHECK(enumerate_classes(1, 3, 1, 2, 1) == as_set(m.cubics));
}

TEST_CASE("line pair products are binary and mark the crossings") {
  const IncidenceModel& m = model();
  std::set<std::pair<int, int>> crossings;
  for (size_t i = 0; i < m.lines.size(); ++i)
    for (size_t j = i + 1; j < m.lines.size(); ++j) {
      long d = cls_dot(m.lines[i], m.lines[j]);
      CHECK((d == 0 || d == 1));
      if (d == 1) crossings.emplace(static_cast<int>(i), static_cast<int>(j));
    }
  CHECK(crossings.size() == 15);
  CHECK(crossings == std::set<std::pair<int, int>>(m.xi.begin(), m.xi.end()));
  // adjacency lists mirror the crossing set
  long degree_total = 0;
  for (size_t i = 0; i < m.adjacency.size(); ++i) {
    for (int j : m.adjacency[i]) {
      int lo = std::min(static_cast<int>(i), j), hi = std::max(static_cast<int>(i), j);
      CHECK(crossings.count({lo, hi}) == 1);
    }
    degree_total += static_cast<long>(m.adjacency[i].size());
  }
  CHECK(degree_total == 30);
}

TEST_CASE("incidence graph is the petersen graph") {
  PetersenReport p = petersen_check(model());
  CHECK(p.vertices == 10);
  CHECK(p.edges == 15);
  CHECK(p.three_regular);
  CHECK(p.girth == 5);
  CHECK(p.aut_order == 120);
  CHECK(p.vertex_transitive);
}

TEST_CASE("lattice symmetries") {
  const WeylAction& a = [] {
    static WeylAction w = weyl_action(model());
    return w;
  }();
  CHECK(a.elements.size() == 120);
  std::set<std::string> distinct;
  for (const Perm& p : a.conic_perms) distinct.insert(p.cycle_string());
  CHECK(distinct.size() == 120);  // the conic action is faithful
  CHECK(a.line_orbit_size == 10);
  CHECK(a.line_stab_order == 12);
  CHECK(a.line_orbit_size * a.line_stab_order == 120);
  CHECK(a.xi_orbit_size == 15);
  CHECK(a.xi_stab_order == 8);
  CHECK(a.xi_orbit_size * a.xi_stab_order == 120);
}

TEST_CASE("lattice traces agree with the reference fixed-point data") {
  WeylAction a = weyl_action(model());
  std::vector<LatticeTraceRow> rows = lattice_lefschetz(a);
  REQUIRE(rows.size() == 7);
  size_t total = 0;
  for (const LatticeTraceRow& r : rows) {
    total += r.class_size;
    CHECK(r.lefschetz == 2 + r.pic_trace);
  }
  CHECK(total == 120);
  std::map<std::vector<int>, const LatticeTraceRow*> by_type;
  for (const LatticeTraceRow& r : rows) by_type.emplace(r.cycle_type, &r);
  REQUIRE(by_type.size() == 7);
  for (const LefRowFixture& fx : fixture_lefschetz_rows()) {
    auto key = Perm::parse(5, fx.label).cycle_type();
    REQUIRE(by_type.count(key));
    const LatticeTraceRow* r = by_type.at(key);
    CHECK(r->class_size == fx.size);
    CHECK(r->pic_trace == fx.tr_w4 + 1);
    CHECK(r->lefschetz == fx.lef);
  }
}

TEST_CASE("incidence census") {
  IncidenceCensus c = incidence_census(model());
  CHECK(c.products_binary);
  CHECK(c.per_cubic_six);
  CHECK(c.own_lines_incident);
  CHECK(c.cp_is_conic);
  CHECK(c.rp_is_cubic);
  CHECK(c.total == 90);
  CHECK(c.at_xi == 60);
  CHECK(c.leftover == 30);
  CHECK(c.total == c.at_xi + c.leftover);
  REQUIRE(c.approx_classes.size() == 5);
  std::set<int> seen;
  for (const auto& fiber : c.approx_classes) {
    CHECK(fiber.size() == 3);
    for (int p : fiber) seen.insert(p);
  }
  CHECK(seen.size() == 15);  // the fibers partition the crossing set
}
