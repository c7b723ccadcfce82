#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "icoq/perm.hpp"

namespace icoq {

// Divisor class on the quintic del Pezzo surface, written in the exceptional
// basis e0..e4 of the blowup model; the intersection form is diag(1,-1,-1,-1,-1).
using Cls = std::array<long, 5>;
using Mat5 = std::array<std::array<long, 5>, 5>;

long cls_dot(const Cls& a, const Cls& b);
Cls cls_add(const Cls& a, const Cls& b);
Cls cls_neg(const Cls& a);
Cls canonical_class();  // K = -3e0 + e1 + e2 + e3 + e4

Cls mat5_apply(const Mat5& m, const Cls& c);  // columns are the basis images
Mat5 mat5_mul(const Mat5& a, const Mat5& b);

// Line, conic, and cubic classes with the intersecting-pair set and the line
// incidence graph.
struct IncidenceModel {
  std::vector<Cls> lines;                    // 10: L^2 = -1, K.L = -1
  std::vector<Cls> conics;                   // 5: C^2 = 0, -K.C = 2
  std::vector<Cls> cubics;                   // 5: R^2 = 1, -K.R = 3
  std::vector<std::pair<int, int>> xi;       // 15 intersecting line pairs, i < j
  std::vector<std::vector<int>> adjacency;   // line incidence graph (Petersen)
};

// Exhaustive class enumeration over the coefficient box |c| <= 3, with the
// structural counts pinned. InternalInconsistency on any miss.
IncidenceModel dp5_build();

struct PetersenReport {
  int vertices = 0;
  int edges = 0;
  bool three_regular = false;
  int girth = 0;
  long aut_order = 0;
  bool vertex_transitive = false;
};

PetersenReport petersen_check(const IncidenceModel& m);

// The lattice Weyl group: permutations of e1..e4 together with the quadratic
// transformation based at the first three points.
struct WeylAction {
  std::vector<Mat5> elements;      // 120
  std::vector<Perm> conic_perms;   // the induced permutations of the 5 conics
  size_t line_orbit_size = 0;
  size_t line_stab_order = 0;
  size_t xi_orbit_size = 0;
  size_t xi_stab_order = 0;
};

// Generates the group, verifies that every element preserves the form and K
// and that the conic action is a faithful degree-5 permutation action of
// order 120. PinFailure on any miss.
WeylAction weyl_action(const IncidenceModel& m);

struct LatticeTraceRow {
  std::vector<int> cycle_type;  // on the 5 conic classes, descending
  std::string class_label;      // cycle string of a representative
  size_t class_size = 0;
  int element_order = 0;
  long pic_trace = 0;           // trace of the 5x5 lattice matrix
  long lefschetz = 0;           // 2 + trace
};

// Per-conjugacy-class traces of the Weyl action on the lattice, sorted by
// (element order, class size).
std::vector<LatticeTraceRow> lattice_lefschetz(const WeylAction& a);

struct IncidenceCensus {
  bool products_binary = false;  // every R_P . L lies in {0,1}
  bool per_cubic_six = false;    // each R_P meets exactly 6 of the 10 lines
  bool own_lines_incident = false;  // the two lines of P are among them
  bool cp_is_conic = false;         // every L1+L2 is an enumerated conic class
  bool rp_is_cubic = false;         // every -K-C_P is an enumerated cubic class
  long total = 0;     // all (P, L) incidences: 90
  long at_xi = 0;     // incidences through sibling members of P's class: 60
  long leftover = 0;  // incidences on P's own lines: 30
  std::vector<std::vector<int>> approx_classes;  // fibers of P -> C_P: 5 triples
};

IncidenceCensus incidence_census(const IncidenceModel& m);

}  // namespace icoq
