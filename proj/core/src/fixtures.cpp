#include "icoq/fixtures.hpp"

#include <map>

#include "icoq/errors.hpp"

namespace icoq {

namespace {

const std::map<std::string, std::string>& fixture_map() {
  static const std::map<std::string, std::string> m = {
      {"z2-form", "x0^2 + x1*x2"},
      {"z6-form", "8*x0^4*x1*x2 - x0*x1^5 - 2*x0^2*x1^2*x2^2 + x1^3*x2^3 - x0*x2^5"},
      {"phi-relation",
       "-1728*z6^5 + z10^3 + 720*z2*z6^3*z10 - 80*z2^2*z6*z10^2 + 64*z2^3*(5*z6^2 - z2*z10)^2"},
      {"phi-head", "-1728*z6^5 + z10^3 + 720*z2*z6^3*z10 - 80*z2^2*z6*z10^2"},
      {"phi-bracket", "5*z6^2 - z2*z10"},
      {"quintic-psi",
       "3125*z5^4 - 3750*z2*z3*z5^3 + 2000*z2*z4^2*z5^2 + 108*z2^5*z5^2 + 825*z2^2*z3^2*z5^2"
       " - 900*z2^3*z4*z5^2 + 2250*z3^2*z4*z5^2 + 16*z2^3*z3^3*z5 - 72*z2^4*z3*z4*z5"
       " + 108*z3^5*z5 - 1600*z3*z4^3*z5 - 630*z2*z3^3*z4*z5 + 560*z2^2*z3*z4^2*z5"
       " + 16*z2^4*z4^3 - 4*z2^3*z3^2*z4^2 - 27*z3^4*z4^2 + 144*z2*z3^2*z4^3"
       " - 128*z2^2*z4^4 + 256*z4^5"},
      {"quintic-upsilon",
       "3125*z5^4 + 256*z4^5 - 27*z3^4*z4^2 + 108*z3^5*z5 - 1600*z3*z4^3*z5"
       " + 2250*z3^2*z4*z5^2"},
      {"upsilon-chart",
       "256*z4^5 - 1600*z4^3*z5 + 3125*z5^4 + 2250*z4*z5^2 - 27*z4^2 + 108*z5"},
      {"d-chart",
       "64*(5*y3^2 - y5)^2 - 1728*y3^5 + 720*y3^3*y5 - 80*y3*y5^2 + y5^3"},
      {"d-chart-head", "-1728*y3^5 + 720*y3^3*y5 - 80*y3*y5^2 + y5^3"},
      {"d-chart-bracket", "5*y3^2 - y5"},
      {"h12-form", "x1^11*x2 + 11*x1^5*x2^6 + x1*x2^11"},
      {"ternary-molien", "1 0 1 0 1 0 2 0 2 0 3 0 4 0 4 1"},
      {"binary-molien", "1 0 0 0 0 0 0 0 0 0 0 0 1"},
      {"kvolume-fano3", "16/15"},
      {"kvolume-p113", "25/3"},
      {"kvolume-p123", "6"},
      {"pencil-p345", "8/3|pass"},
      {"pencil-p135", "3|pass-with-basepoint-condition"},
      {"pencil-plane-sextic", "6|fail"},
      {"dp5-counts", "lines:10 xi:15 conics:5 cubics:5"},
      {"petersen", "vertices:10 edges:15 regular:3 girth:5 aut:120"},
      {"weyl-orbits", "lines:10/12 xi:15/8"},
      {"incidence-census", "total:90 at-xi:60 leftover:30"},
      {"binary-class-sizes", "1 1 30 12 12 12 12 20 20"},
      {"binary-class-orders", "1 2 4 5 5 10 10 6 3"},
      {"lefschetz-row", "7 5 3 4 2 3 2"},
      {"diag-singularities", "A4 at (0,0); A1 at (1,4); A2 at (32/27,1024/81); delta sum 4"},
      {"twisted-singularities",
       "A1 at (-3/20*t^2, 9/50*t) over t^3 = 5; A2 at (3/20*t^2, 3/50*t) over t^3 = 10"},
  };
  return m;
}

}  // namespace

const std::string& fixture_text(const std::string& key) {
  const auto& m = fixture_map();
  auto it = m.find(key);
  if (it == m.end()) fail("IndexOutOfRange", "unknown fixture key: " + key);
  return it->second;
}

MultiPoly<Rational> fixture_poly(const std::string& key, std::vector<std::string> vars) {
  return qparse(std::move(vars), fixture_text(key));
}

MultiPoly<Rational> fixture_phi() {
  std::vector<std::string> vars{"z2", "z6", "z10"};
  auto head = fixture_poly("phi-head", vars);
  auto bracket = fixture_poly("phi-bracket", vars);
  auto z2cube = qparse(vars, "z2^3");
  return head + (z2cube * bracket * bracket).scaled(Rational(64));
}

MultiPoly<Rational> fixture_d_chart() {
  std::vector<std::string> vars{"y3", "y5"};
  auto head = fixture_poly("d-chart-head", vars);
  auto bracket = fixture_poly("d-chart-bracket", vars);
  return head + (bracket * bracket).scaled(Rational(64));
}

CharTableFixture fixture_s5_table() {
  CharTableFixture f;
  f.col_labels = {"C1", "C2-", "C2+", "C3", "C6", "C4", "C5"};
  f.row_labels = {"W1", "W1'", "W4", "W4'", "W5", "W5'", "W6"};
  f.cells = {
      {"1", "1", "1", "1", "1", "1", "1"},
      {"1", "-1", "1", "1", "-1", "-1", "1"},
      {"4", "2", "0", "1", "-1", "0", "-1"},
      {"4", "-2", "0", "1", "1", "0", "-1"},
      {"5", "1", "1", "-1", "1", "-1", "0"},
      {"5", "-1", "1", "-1", "-1", "1", "0"},
      {"6", "0", "-2", "0", "0", "0", "1"},
  };
  return f;
}

CharTableFixture fixture_binary_table() {
  CharTableFixture f;
  f.col_labels = {"C1,1", "C2,1", "C4,30", "C5,12a", "C5,12b",
                  "C10,12a", "C10,12b", "C6,20", "C3,20"};
  f.row_labels = {"V1", "V2", "V2'", "V3", "V3'", "V4'", "V4", "V5", "V6"};
  f.cells = {
      {"1", "1", "1", "1", "1", "1", "1", "1", "1"},
      {"2", "-2", "0", "-1/2 + 1/2*s", "-1/2 - 1/2*s", "1/2 - 1/2*s", "1/2 + 1/2*s", "1",
       "-1"},
      {"2", "-2", "0", "-1/2 - 1/2*s", "-1/2 + 1/2*s", "1/2 + 1/2*s", "1/2 - 1/2*s", "1",
       "-1"},
      {"3", "3", "-1", "1/2 - 1/2*s", "1/2 + 1/2*s", "1/2 - 1/2*s", "1/2 + 1/2*s", "0",
       "0"},
      {"3", "3", "-1", "1/2 + 1/2*s", "1/2 - 1/2*s", "1/2 + 1/2*s", "1/2 - 1/2*s", "0",
       "0"},
      {"4", "4", "0", "-1", "-1", "-1", "-1", "1", "1"},
      {"4", "-4", "0", "-1", "-1", "1", "1", "-1", "1"},
      {"5", "5", "1", "0", "0", "0", "0", "-1", "-1"},
      {"6", "-6", "0", "1", "1", "-1", "-1", "0", "0"},
  };
  return f;
}

std::vector<SubgroupRowFixture> fixture_subgroup_rows() {
  return {
      {2, "mu2", "(1,2)", false, 10, 12},
      {2, "mu2", "(1,2)(3,4)", true, 15, 8},
      {3, "mu3", "(1,2,3)", true, 10, 12},
      {4, "mu2xmu2", "(1,2)(3,4); (1,3)(2,4)", true, 5, 24},
      {4, "mu2xmu2", "(1,2); (3,4)", false, 15, 8},
      {4, "mu4", "(1,3,2,4)", false, 15, 8},
      {5, "mu5", "(1,2,3,5,4)", true, 6, 20},
      {6, "S3", "(1,2,3); (1,2)", false, 10, 12},
      {6, "S3", "(1,2,3); (1,2)(4,5)", true, 10, 12},
      {6, "mu6", "(1,2,3)(4,5)", false, 10, 12},
      {8, "D4", "(1,2)(3,4); (1,3)(2,4); (1,3,2,4)", false, 15, 8},
      {10, "D5", "(1,2,3,5,4); (1,2)(3,4)", true, 6, 20},
      {12, "A4", "(1,2,3); (1,2)(3,4); (1,3)(2,4)", true, 5, 24},
      {12, "D6", "(1,2,3); (1,2); (4,5)", false, 10, 12},
      {20, "mu5:mu4", "(1,2,3,5,4); (1,2)(3,4); (1,3,2,4)", false, 6, 20},
      {24, "S4", "(1,2,3); (1,2)(3,4); (1,3)(2,4); (1,3,2,4)", false, 5, 24},
      {60, "A5", "(1,2,3); (1,2)(3,4); (1,3)(2,4); (1,2,3,5,4)", true, 1, 120},
  };
}

std::vector<LefRowFixture> fixture_lefschetz_rows() {
  return {
      {"(1)", 1, 1, 4, 7},
      {"(1,2)", 10, 2, 2, 5},
      {"(1,2)(3,4)", 15, 2, 0, 3},
      {"(1,2,3)", 20, 3, 1, 4},
      {"(1,2,3)(4,5)", 20, 6, -1, 2},
      {"(1,2,3,4)", 30, 4, 0, 3},
      {"(1,2,3,4,5)", 24, 5, -1, 2},
  };
}

}  // namespace icoq
