#include "icoq/suites.hpp"

#include <cctype>
#include <future>
#include <map>
#include <string>
#include <vector>

#include "icoq/dp5.hpp"
#include "icoq/fixtures.hpp"
#include "icoq/klein.hpp"
#include "icoq/matgroup.hpp"
#include "icoq/perm.hpp"
#include "icoq/rep.hpp"
#include "icoq/singularity.hpp"
#include "icoq/symfunc.hpp"
#include "icoq/wps.hpp"

namespace icoq {

namespace {

template <class T>
std::string join_nums(const std::vector<T>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<Perm> split_generators(const std::string& text, int degree) {
  std::vector<Perm> gens;
  size_t pos = 0;
  while (pos != std::string::npos) {
    size_t semi = text.find(';', pos);
    std::string word = semi == std::string::npos ? text.substr(pos) : text.substr(pos, semi - pos);
    size_t a = word.find_first_not_of(' ');
    size_t b = word.find_last_not_of(' ');
    gens.push_back(Perm::parse(degree, word.substr(a, b - a + 1)));
    pos = semi == std::string::npos ? std::string::npos : semi + 1;
  }
  return gens;
}

// The affine chart of the degree-30 relation where the weight-2 generator is
// scaled to 1; the chart coordinates have weights 3 and 5.
MultiPoly<Rational> diag_chart_of(const MultiPoly<Rational>& phi_formal) {
  MultiPoly<Rational> out = qpoly({"y3", "y5"});
  for (const auto& [e, c] : phi_formal.terms()) out.add_term(ExpVec{e[1], e[2]}, c);
  return out;
}

// Embed a scalar written over sqrt(5) (symbol "s") into the cyclotomic field.
NFElem cell_over_sqrt5(const FieldPtr& cyc, const NFElem& sqrt5, const std::string& text) {
  static const FieldPtr quad = field_sqrt5();
  NFElem v = NFElem::parse(quad, text);
  return NFElem::from_rational(cyc, v.coords()[0]) + sqrt5.scaled(v.coords()[1]);
}

void suite_invariants(CheckRecorder& rec) {
  const std::vector<std::string> xv = {"x0", "x1", "x2"};
  KleinPackage k = klein_construct();
  rec.add("z2-display", "z2-form", k.z2 == fixture_poly("z2-form", xv), fixture_text("z2-form"),
          k.z2.str());
  rec.add("z6-display", "z6-form", k.z6 == fixture_poly("z6-form", xv), fixture_text("z6-form"),
          k.z6.str());
  auto w10 = k.z10.weighted_degree({1, 1, 1});
  rec.add("z10-shape", "z10-derivation",
          k.z10.terms().size() == 12 && w10.homogeneous && w10.degree == 10,
          "12 terms, homogeneous of degree 10",
          std::to_string(k.z10.terms().size()) + " terms, " +
              (w10.homogeneous ? "homogeneous" : "inhomogeneous") + " of degree " +
              std::to_string(w10.degree));
  auto w15 = k.z15.weighted_degree({1, 1, 1});
  rec.add("z15-shape", "z15-derivation",
          k.z15.terms().size() == 20 && w15.homogeneous && w15.degree == 15,
          "20 terms, homogeneous of degree 15",
          std::to_string(k.z15.terms().size()) + " terms, " +
              (w15.homogeneous ? "homogeneous" : "inhomogeneous") + " of degree " +
              std::to_string(w15.degree));
  rec.add("phi-display", "phi-relation", k.phi_formal == fixture_phi(),
          fixture_text("phi-relation"), k.phi_formal.str());
  rec.add("fundamental-relation", "phi-relation", k.relation_residue.is_zero(), "0",
          k.relation_residue.str());

  MatGroup bin = binary_icosahedral();
  MatGroup tern = ternary_icosahedral(bin);
  rec.add("ternary-group-order", "icosahedral-action", tern.order() == 60, "60",
          std::to_string(tern.order()));
  {
    bool ok = true;
    std::string msg = "generator orders 5, 2, 3; z2 and z6 preserved";
    try {
      verify_ternary_pins(tern, k);
    } catch (const Error& e) {
      ok = false;
      msg = e.what();
    }
    rec.add("ternary-invariance", "icosahedral-action", ok,
            "generator orders 5, 2, 3; z2 and z6 preserved", msg);
  }

  BinaryInvariant h = binary_degree12_invariant(bin);
  rec.add("h12-dimension", "h12-derivation", h.invariant_dimension == 1, "1",
          std::to_string(h.invariant_dimension));
  rec.add_flagged("h12-display", "h12-form", h.h12 == fixture_poly("h12-form", {"x1", "x2"}),
                  fixture_text("h12-form"), h.h12.str());

  auto classes3 = tern.conjugacy_classes();
  std::vector<Mat<NFElem>> reps3;
  std::vector<size_t> sizes3;
  for (const auto& c : classes3) {
    reps3.push_back(tern.elements()[c.rep_index]);
    sizes3.push_back(c.size);
  }
  auto molien3 = molien_dims(reps3, sizes3, tern.order(), 15);
  auto series3 = series_coeffs({2, 6, 10}, 15, 15);
  auto linear3 = invariant_dims_linear(tern, 15);
  rec.add("ternary-molien-linear", "ternary-molien", linear3 == molien3, join_nums(molien3),
          join_nums(linear3));
  rec.add("ternary-hilbert-series", "ternary-molien",
          molien3 == series3 && join_nums(series3) == fixture_text("ternary-molien"),
          fixture_text("ternary-molien"), join_nums(molien3));

  auto classes2 = bin.conjugacy_classes();
  std::vector<Mat<NFElem>> reps2;
  std::vector<size_t> sizes2;
  for (const auto& c : classes2) {
    reps2.push_back(bin.elements()[c.rep_index]);
    sizes2.push_back(c.size);
  }
  auto molien2 = molien_dims(reps2, sizes2, bin.order(), 12);
  auto series2 = series_coeffs({12, 20}, 30, 12);
  auto linear2 = invariant_dims_linear(bin, 12);
  rec.add("binary-molien-linear", "binary-molien", linear2 == molien2, join_nums(molien2),
          join_nums(linear2));
  rec.add("binary-hilbert-series", "binary-molien",
          molien2 == series2 && join_nums(series2) == fixture_text("binary-molien"),
          fixture_text("binary-molien"), join_nums(molien2));
}

void suite_discriminant(CheckRecorder& rec) {
  DiscriminantSuite ds = quintic_discriminant();
  rec.add("vandermonde-terms", "quintic-discriminant", ds.vandermonde.terms().size() == 120,
          "120", std::to_string(ds.vandermonde.terms().size()));
  rec.add("square-symmetric", "quintic-discriminant",
          ds.square.terms().size() == 2961 && is_symmetric(ds.square), "symmetric, 2961 terms",
          std::string(is_symmetric(ds.square) ? "symmetric" : "not symmetric") + ", " +
              std::to_string(ds.square.terms().size()) + " terms");

  std::map<std::string, MultiPoly<Rational>> at_esym;
  for (int i = 0; i < 5; ++i) at_esym.emplace("z" + std::to_string(i + 1), ds.e[i]);
  MultiPoly<Rational> residue = ds.delta.subst(at_esym) - ds.square;
  rec.add("delta-identity", "quintic-discriminant", residue.is_zero(), "0", residue.str());

  auto wd = ds.delta.weighted_degree({1, 2, 3, 4, 5});
  rec.add("delta-weighted-degree", "quintic-discriminant", wd.homogeneous && wd.degree == 20,
          "homogeneous of weight 20",
          std::string(wd.homogeneous ? "homogeneous" : "inhomogeneous") + " of weight " +
              std::to_string(wd.degree));
  rec.add("delta-reduction", "quintic-discriminant",
          ds.delta.terms().size() == 59 && ds.reduction_steps == 59, "59 terms in 59 steps",
          std::to_string(ds.delta.terms().size()) + " terms in " +
              std::to_string(ds.reduction_steps) + " steps");

  rec.add_flagged("psi-display", "quintic-psi",
                  ds.psi == fixture_poly("quintic-psi", {"z2", "z3", "z4", "z5"}),
                  fixture_text("quintic-psi"), ds.psi.str());
  rec.add_flagged("upsilon-display", "quintic-upsilon",
                  ds.upsilon == fixture_poly("quintic-upsilon", {"z3", "z4", "z5"}),
                  fixture_text("quintic-upsilon"), ds.upsilon.str());
  rec.add_flagged("upsilon-chart-display", "upsilon-chart",
                  ds.upsilon_chart == fixture_poly("upsilon-chart", {"z4", "z5"}),
                  fixture_text("upsilon-chart"), ds.upsilon_chart.str());

  // Repeated roots kill the discriminant; distinct integers give the squared
  // superfactorial.
  auto eval_delta = [&ds](const std::vector<long>& roots) {
    std::map<std::string, MultiPoly<Rational>> at;
    std::vector<std::string> zv = esym_vars(5);
    for (int kk = 1; kk <= 5; ++kk) {
      MultiPoly<Rational> ek = elementary_symmetric(kk, 5);
      std::map<std::string, MultiPoly<Rational>> point;
      std::vector<std::string> xv = root_vars(5);
      for (int i = 0; i < 5; ++i)
        point.emplace(xv[i], MultiPoly<Rational>::constant(xv, Rational(1), Rational(roots[i])));
      at.emplace("z" + std::to_string(kk), ek.subst(point));
    }
    MultiPoly<Rational> v = ds.delta.subst(at);
    return v.coeff(ExpVec{0, 0, 0, 0, 0});
  };
  Rational rep = eval_delta({1, 1, 2, 3, 4});
  rec.add("delta-repeated-root", "quintic-discriminant", rep == Rational(0), "0", rep.str());
  Rational sep = eval_delta({0, 1, 2, 3, 4});
  rec.add("delta-separated-roots", "quintic-discriminant", sep == Rational(82944), "82944",
          sep.str());
}

void suite_singularities(CheckRecorder& rec) {
  KleinPackage k = klein_construct();
  MultiPoly<Rational> chart = diag_chart_of(k.phi_formal);
  rec.add("d-chart-consistency", "d-chart", chart == fixture_d_chart(), fixture_text("d-chart"),
          chart.str());

  struct Want {
    const char* id;
    Rational a, b;
    const char* type;
    long delta;
  };
  const std::vector<Want> wants = {
      {"diag-origin-a4", Rational(0), Rational(0), "A4", 2},
      {"diag-node-a1", Rational(1), Rational(4), "A1", 1},
      {"diag-cusp-a2", Rational(32, 27), Rational(1024, 81), "A2", 1},
  };
  long delta_sum = 0;
  for (const auto& w : wants) {
    SingularityReport rep = classify(germ_localize(chart, {w.a, w.b}));
    delta_sum += rep.delta;
    rec.add(w.id, "diag-singularities",
            rep.type_string() == w.type && rep.delta == w.delta,
            std::string(w.type) + " with delta " + std::to_string(w.delta),
            rep.type_string() + " with delta " + std::to_string(rep.delta));
  }
  rec.add("diag-delta-sum", "diag-singularities", delta_sum == 4, "4",
          std::to_string(delta_sum));
  {
    SingularityReport rep = classify(germ_localize(chart, {Rational(0), Rational(-64)}));
    rec.add("diag-smooth-control", "diag-singularities", rep.type_string() == "Smooth", "Smooth",
            rep.type_string());
  }

  DiscriminantSuite ds = quintic_discriminant();
  {
    FieldPtr c5 = field_cbrt(5);
    auto curve = promote(ds.upsilon_chart, c5);
    std::vector<NFElem> p = {NFElem::parse(c5, "-3/20*t^2"), NFElem::parse(c5, "9/50*t")};
    SingularityReport rep = classify(germ_localize(curve, p));
    rec.add("twisted-node-a1", "twisted-singularities", rep.type_string() == "A1",
            "A1 over t^3 = 5", rep.type_string() + " over t^3 = 5");
  }
  {
    FieldPtr c10 = field_cbrt(10);
    auto curve = promote(ds.upsilon_chart, c10);
    std::vector<NFElem> p = {NFElem::parse(c10, "3/20*t^2"), NFElem::parse(c10, "3/50*t")};
    SingularityReport rep = classify(germ_localize(curve, p));
    rec.add("twisted-cusp-a2", "twisted-singularities", rep.type_string() == "A2",
            "A2 over t^3 = 10", rep.type_string() + " over t^3 = 10");
  }
}

void suite_characters(CheckRecorder& rec) {
  PermGroup s5 = PermGroup::symmetric(5);
  QCharTable qt = s5_character_table(s5);
  CharTableFixture fs = fixture_s5_table();
  {
    size_t matched = 0, total = 0;
    std::string miss;
    for (size_t fr = 0; fr < fs.row_labels.size(); ++fr) {
      size_t cr = qt.row_labels.size();
      for (size_t i = 0; i < qt.row_labels.size(); ++i)
        if (qt.row_labels[i] == fs.row_labels[fr]) cr = i;
      for (size_t j = 0; j < fs.col_labels.size(); ++j) {
        ++total;
        bool ok = cr < qt.row_labels.size() &&
                  qt.rows[cr][j] == Rational::parse(fs.cells[fr][j]);
        if (ok)
          ++matched;
        else if (miss.empty())
          miss = "first mismatch at (" + fs.row_labels[fr] + ", " + fs.col_labels[j] + ")";
      }
    }
    rec.add("s5-table-cells", "s5-char-table", matched == total,
            "all " + std::to_string(total) + " cells",
            std::to_string(matched) + " of " + std::to_string(total) + " cells" +
                (miss.empty() ? "" : "; " + miss));
  }
  rec.add("s5-orthogonality", "s5-char-table", q_table_orthonormal(s5, qt, s5_irreps(s5)),
          "orthonormal rows", "first orthogonality relations checked");
  {
    Rational sum(0);
    for (const auto& row : qt.rows) sum += row[0] * row[0];  // degree = identity column
    rec.add("s5-dimension-sum", "s5-char-table", sum == Rational(120), "120", sum.str());
  }

  MatGroup bin = binary_icosahedral();
  rec.add("binary-group-order", "binary-group", bin.order() == 120, "120",
          std::to_string(bin.order()));
  {
    auto cz = bin.center_indices();
    int involutions = 0;
    for (int idx : cz)
      if (bin.element_order(idx) == 2) ++involutions;
    rec.add("binary-central-involution", "binary-group", cz.size() == 2 && involutions == 1,
            "center of order 2 with a unique involution",
            "center of order " + std::to_string(cz.size()) + " with " +
                std::to_string(involutions) + " involution(s)");
  }
  NFCharTable nt = binary_character_table(bin);
  rec.add("binary-class-sizes", "binary-class-sizes",
          join_nums(nt.class_sizes) == fixture_text("binary-class-sizes"),
          fixture_text("binary-class-sizes"), join_nums(nt.class_sizes));
  rec.add("binary-class-orders", "binary-class-orders",
          join_nums(nt.class_orders) == fixture_text("binary-class-orders"),
          fixture_text("binary-class-orders"), join_nums(nt.class_orders));
  CharTableFixture fb = fixture_binary_table();
  {
    NFElem sqrt5 = sqrt5_in_zeta5(bin.field());
    size_t matched = 0, total = 0;
    std::string miss;
    for (size_t fr = 0; fr < fb.row_labels.size(); ++fr) {
      size_t cr = nt.row_labels.size();
      for (size_t i = 0; i < nt.row_labels.size(); ++i)
        if (nt.row_labels[i] == fb.row_labels[fr]) cr = i;
      for (size_t j = 0; j < fb.col_labels.size(); ++j) {
        ++total;
        bool ok = cr < nt.row_labels.size() &&
                  nt.rows[cr][j] == cell_over_sqrt5(bin.field(), sqrt5, fb.cells[fr][j]);
        if (ok)
          ++matched;
        else if (miss.empty())
          miss = "first mismatch at (" + fb.row_labels[fr] + ", " + fb.col_labels[j] + ")";
      }
    }
    rec.add("binary-table-cells", "binary-char-table", matched == total,
            "all " + std::to_string(total) + " cells",
            std::to_string(matched) + " of " + std::to_string(total) + " cells" +
                (miss.empty() ? "" : "; " + miss));
  }
  rec.add("binary-orthogonality", "binary-char-table",
          nf_table_orthonormal(bin, nt, binary_irreps(bin.field())),
          "orthonormal rows", "first orthogonality relations checked");
  {
    Rational sum(0);
    bool rational_dims = true;
    for (const auto& row : nt.rows) {
      const NFElem& d = row[0];
      if (!d.is_rational()) {
        rational_dims = false;
        continue;
      }
      sum += d.rational_part() * d.rational_part();
    }
    rec.add("binary-dimension-sum", "binary-char-table", rational_dims && sum == Rational(120),
            "120", sum.str());
  }
}

void suite_lefschetz(CheckRecorder& rec) {
  PermGroup s5 = PermGroup::symmetric(5);
  LefschetzTable lt = lefschetz_table(s5);
  auto fixture = fixture_lefschetz_rows();

  auto type_of = [](const std::string& label) { return Perm::parse(5, label).cycle_type(); };
  std::vector<Rational> lef_in_fixture_order;
  for (const auto& fr : fixture) {
    auto want_type = type_of(fr.label);
    std::string id = "lef";
    for (int part : want_type) id += "-" + std::to_string(part);
    size_t col = lt.class_labels.size();
    for (size_t j = 0; j < lt.class_labels.size(); ++j)
      if (type_of(lt.class_labels[j]) == want_type) col = j;
    bool ok = col < lt.class_labels.size() && lt.class_sizes[col] == fr.size &&
              lt.pic_traces[col] == Rational(fr.tr_w4 + 1) &&
              lt.lefschetz[col] == Rational(fr.lef);
    std::string computed = col < lt.class_labels.size()
                               ? "size " + std::to_string(lt.class_sizes[col]) + ", tr " +
                                     lt.pic_traces[col].str() + ", Lef " +
                                     lt.lefschetz[col].str()
                               : "class not found";
    rec.add(id, "pic-action-table", ok,
            "size " + std::to_string(fr.size) + ", tr " + std::to_string(fr.tr_w4 + 1) +
                ", Lef " + std::to_string(fr.lef),
            computed);
    if (col < lt.class_labels.size()) lef_in_fixture_order.push_back(lt.lefschetz[col]);
  }
  {
    std::string got;
    for (size_t i = 0; i < lef_in_fixture_order.size(); ++i)
      got += (i ? " " : "") + lef_in_fixture_order[i].str();
    rec.add("lefschetz-row-values", "lefschetz-row", got == fixture_text("lefschetz-row"),
            fixture_text("lefschetz-row"), got);
  }

  // The lattice model must reproduce the same traces class-for-class.
  IncidenceModel m = dp5_build();
  WeylAction wa = weyl_action(m);
  auto lattice = lattice_lefschetz(wa);
  size_t matched = 0;
  std::string miss;
  for (size_t j = 0; j < lt.class_labels.size(); ++j) {
    auto want_type = type_of(lt.class_labels[j]);
    bool hit = false;
    for (const auto& row : lattice)
      if (row.cycle_type == want_type) {
        hit = row.class_size == lt.class_sizes[j] &&
              Rational(row.lefschetz) == lt.lefschetz[j] &&
              Rational(row.pic_trace) == lt.pic_traces[j];
        break;
      }
    if (hit)
      ++matched;
    else if (miss.empty())
      miss = "mismatch on class " + lt.class_labels[j];
  }
  rec.add("lattice-concordance", "pic-action-table", matched == lt.class_labels.size(),
          "7 classes agree with the lattice action",
          std::to_string(matched) + " of " + std::to_string(lt.class_labels.size()) +
              " classes agree" + (miss.empty() ? "" : "; " + miss));
}

void suite_subgroups(CheckRecorder& rec) {
  PermGroup s5 = PermGroup::symmetric(5);
  auto census = s5.subgroup_census();
  rec.add("census-classes", "subgroup-table", census.size() == 17, "17",
          std::to_string(census.size()));
  size_t total = 0;
  bool norm_identity = true;
  for (const auto& row : census) {
    total += row.count;
    if (row.normalizer_order * row.count != 120) norm_identity = false;
  }
  rec.add("census-total", "subgroup-table", total == 154, "154", std::to_string(total));
  rec.add("normalizer-count-identity", "subgroup-table", norm_identity,
          "|N(H)| * count = 120 for all classes",
          norm_identity ? "holds for all classes" : "violated");

  for (const auto& fr : fixture_subgroup_rows()) {
    std::string slug = fr.label;
    for (char& c : slug) {
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      if (c == ':') c = '-';
    }
    std::string id = "row-" + std::to_string(fr.order) + "-" + slug +
                     (fr.in_alternating ? "-even" : "-odd");
    const SubgroupClassRecord* hit = nullptr;
    for (const auto& row : census)
      if (row.order == fr.order && row.label == fr.label &&
          row.in_alternating == fr.in_alternating)
        hit = &row;
    bool closure_ok = false;
    std::string closure_msg;
    try {
      PermGroup h = PermGroup::closure(5, split_generators(fr.generators, 5));
      closure_ok = h.order() == fr.order && iso_fingerprint(h.elements()) == fr.label;
      closure_msg = "generators close to order " + std::to_string(h.order());
    } catch (const Error& e) {
      closure_msg = e.what();
    }
    bool ok = hit != nullptr && hit->count == fr.count &&
              hit->normalizer_order == fr.normalizer_order && closure_ok;
    std::string computed =
        hit == nullptr
            ? "class missing from census"
            : "count " + std::to_string(hit->count) + ", normalizer " +
                  std::to_string(hit->normalizer_order) + ", " + closure_msg;
    rec.add(id, "subgroup-table", ok,
            "count " + std::to_string(fr.count) + ", normalizer " +
                std::to_string(fr.normalizer_order),
            computed);
  }
}

void suite_dp5(CheckRecorder& rec) {
  IncidenceModel m = dp5_build();
  {
    std::string got = "lines:" + std::to_string(m.lines.size()) +
                      " xi:" + std::to_string(m.xi.size()) +
                      " conics:" + std::to_string(m.conics.size()) +
                      " cubics:" + std::to_string(m.cubics.size());
    rec.add("class-counts", "dp5-counts", got == fixture_text("dp5-counts"),
            fixture_text("dp5-counts"), got);
  }
  {
    Cls k = canonical_class();
    rec.add("canonical-square", "dp5-counts", cls_dot(k, k) == 5, "5",
            std::to_string(cls_dot(k, k)));
  }
  PetersenReport pr = petersen_check(m);
  {
    std::string got = "vertices:" + std::to_string(pr.vertices) +
                      " edges:" + std::to_string(pr.edges) +
                      " regular:" + std::string(pr.three_regular ? "3" : "no") +
                      " girth:" + std::to_string(pr.girth) + " aut:" + std::to_string(pr.aut_order);
    rec.add("petersen-graph", "petersen", got == fixture_text("petersen"),
            fixture_text("petersen"), got);
  }
  rec.add("petersen-vertex-transitive", "petersen", pr.vertex_transitive, "vertex-transitive",
          pr.vertex_transitive ? "vertex-transitive" : "not vertex-transitive");
  WeylAction wa = weyl_action(m);
  rec.add("weyl-order", "weyl-orbits", wa.elements.size() == 120, "120",
          std::to_string(wa.elements.size()));
  {
    std::string got = "lines:" + std::to_string(wa.line_orbit_size) + "/" +
                      std::to_string(wa.line_stab_order) +
                      " xi:" + std::to_string(wa.xi_orbit_size) + "/" +
                      std::to_string(wa.xi_stab_order);
    rec.add("weyl-orbits", "weyl-orbits", got == fixture_text("weyl-orbits"),
            fixture_text("weyl-orbits"), got);
  }
  IncidenceCensus ic = incidence_census(m);
  rec.add("incidence-structure", "incidence-census",
          ic.products_binary && ic.per_cubic_six && ic.own_lines_incident && ic.cp_is_conic &&
              ic.rp_is_cubic,
          "pair conics and residual cubics close up; six lines per cubic",
          std::string("products binary: ") + (ic.products_binary ? "yes" : "no") +
              ", six per cubic: " + (ic.per_cubic_six ? "yes" : "no") +
              ", own lines incident: " + (ic.own_lines_incident ? "yes" : "no"));
  {
    std::string got = "total:" + std::to_string(ic.total) + " at-xi:" + std::to_string(ic.at_xi) +
                      " leftover:" + std::to_string(ic.leftover);
    rec.add("incidence-totals", "incidence-census", got == fixture_text("incidence-census"),
            fixture_text("incidence-census"), got);
  }
  {
    bool ok = ic.approx_classes.size() == 5;
    for (const auto& cls : ic.approx_classes) ok = ok && cls.size() == 3;
    rec.add("approx-classes", "incidence-census", ok, "5 classes of size 3",
            std::to_string(ic.approx_classes.size()) + " classes");
  }
}

void suite_wps(CheckRecorder& rec) {
  {
    Rational v = wps_kvolume({2, 3, 4, 5, 10}, 20, 3);
    rec.add("kvolume-fano3", "kvolume-fano3", v.str() == fixture_text("kvolume-fano3"),
            fixture_text("kvolume-fano3"), v.str());
  }
  {
    Rational v = wps_kvolume({1, 1, 3}, 0, 2);
    rec.add("kvolume-p113", "kvolume-p113", v.str() == fixture_text("kvolume-p113"),
            fixture_text("kvolume-p113"), v.str());
  }
  {
    Rational v = wps_kvolume({1, 2, 3}, 0, 2);
    rec.add("kvolume-p123", "kvolume-p123", v.str() == fixture_text("kvolume-p123"),
            fixture_text("kvolume-p123"), v.str());
  }
  {
    auto nw = normalize_weights({2, 6, 10});
    bool ok = nw == std::vector<long>{1, 3, 5} &&
              wps_kvolume({2, 6, 10}, 0, 2) == wps_kvolume({1, 3, 5}, 0, 2);
    rec.add("weight-normalization", "well-formed-model", ok,
            "(2,6,10) normalizes to (1,3,5) with equal volume",
            "(" + join_nums(nw) + "), volume " + wps_kvolume({2, 6, 10}, 0, 2).str());
  }
  auto pencil = [&rec](const char* id, std::vector<long> w, long dD, long dL) {
    PencilBound b = pencil_bound(w, dD, dL);
    std::string got = b.value.str() + "|" + b.verdict;
    rec.add(id, id, got == fixture_text(id), fixture_text(id), got);
  };
  pencil("pencil-p345", {3, 4, 5}, 20, 8);
  pencil("pencil-p135", {1, 3, 5}, 15, 3);
  pencil("pencil-plane-sextic", {1, 1, 1}, 6, 1);
}

using SuiteFn = void (*)(CheckRecorder&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"invariants", suite_invariants}, {"discriminant", suite_discriminant},
      {"characters", suite_characters}, {"lefschetz", suite_lefschetz},
      {"subgroups", suite_subgroups},   {"dp5", suite_dp5},
      {"wps", suite_wps},               {"singularities", suite_singularities},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : suite_table()) n.push_back(name);
    return n;
  }();
  return names;
}

VerificationReport run_suite(const std::string& name) {
  if (name == "all") return run_all(false);
  for (const auto& [suite, fn] : suite_table()) {
    if (suite != name) continue;
    VerificationReport r{suite, {}};
    CheckRecorder rec(r);
    try {
      fn(rec);
    } catch (const Error& e) {
      rec.add("internal-consistency", suite, false, "no internal error", e.what());
    } catch (const std::exception& e) {
      rec.add("internal-consistency", suite, false, "no internal error", e.what());
    }
    return r;
  }
  fail("UnknownSuite", "no suite named '" + name + "'");
}

VerificationReport run_all(bool parallel) {
  VerificationReport all{"all", {}};
  const auto& names = suite_names();
  std::vector<VerificationReport> parts;
  if (parallel) {
    std::vector<std::future<VerificationReport>> futures;
    for (const auto& n : names)
      futures.push_back(std::async(std::launch::async, [n] { return run_suite(n); }));
    for (auto& f : futures) parts.push_back(f.get());
  } else {
    for (const auto& n : names) parts.push_back(run_suite(n));
  }
  for (const auto& part : parts)
    all.checks.insert(all.checks.end(), part.checks.begin(), part.checks.end());
  return all;
}

std::string invariants_poly_dump() {
  KleinPackage k = klein_construct();
  return "z10 = " + k.z10.str() + "\nz15 = " + k.z15.str() + "\n";
}

}  // namespace icoq
