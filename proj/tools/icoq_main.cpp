#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "icoq/errors.hpp"
#include "icoq/number_field.hpp"
#include "icoq/poly.hpp"
#include "icoq/report.hpp"
#include "icoq/singularity.hpp"
#include "icoq/suites.hpp"
#include "json.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;
constexpr int kExitIo = 4;

int exit_code_for(const icoq::Error& e) {
  const std::string& c = e.code();
  if (c == "IoError") return kExitIo;
  if (c == "UnknownSuite" || c == "SyntaxError" || c == "UnknownVariable" ||
      c == "PointNotOnCurve" || c == "ReduciblePolynomial" || c == "NotMonic" ||
      c == "FieldMismatch" || c == "RegistryMismatch")
    return kExitUsage;
  return kExitInternal;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) icoq::fail("IoError", "cannot read file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  if (f.bad()) icoq::fail("IoError", "read failed: " + path);
  return ss.str();
}

// The two curve variables: identifiers at parenthesis depth zero, in
// alphabetical order. "t" is reserved for field scalars.
std::vector<std::string> infer_variables(const std::string& text) {
  std::vector<std::string> seen;
  int depth = 0;
  size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_')) {
      std::string name;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        name += text[i++];
      if (name != "t" && std::find(seen.begin(), seen.end(), name) == seen.end())
        seen.push_back(name);
      continue;
    }
    ++i;
  }
  if (seen.size() != 2)
    icoq::fail("SyntaxError", "curve must use exactly two variables, found " +
                                  std::to_string(seen.size()));
  std::sort(seen.begin(), seen.end());
  return seen;
}

// Monic integer minimal polynomial in t, e.g. "t^3 - 5", as ascending
// coefficients for the field constructor.
std::vector<icoq::BigInt> minpoly_coeffs(const std::string& text) {
  using namespace icoq;
  MultiPoly<Rational> p = qparse({"t"}, text);
  long deg = 0;
  for (const auto& [e, c] : p.terms()) deg = std::max(deg, static_cast<long>(e[0]));
  if (deg < 1) fail("SyntaxError", "minimal polynomial must have positive degree");
  std::vector<BigInt> coeffs;
  for (long k = 0; k <= deg; ++k) {
    Rational c = p.coeff(ExpVec{static_cast<unsigned>(k)});
    if (!c.is_integer())
      fail("NotMonic", "minimal polynomial must have integer coefficients");
    coeffs.push_back(c.numerator());
  }
  return coeffs;
}

std::vector<std::string> split_point(const std::string& text) {
  size_t comma = text.find(',');
  if (comma == std::string::npos)
    icoq::fail("SyntaxError", "point must be two comma-separated coordinates");
  std::string a = text.substr(0, comma);
  std::string b = text.substr(comma + 1);
  if (b.find(',') != std::string::npos)
    icoq::fail("SyntaxError", "point must have exactly two coordinates");
  return {a, b};
}

nlohmann::ordered_json report_to_json(const icoq::SingularityReport& r,
                                      const std::vector<std::string>& vars,
                                      const std::vector<std::string>& point,
                                      const std::string& field) {
  nlohmann::ordered_json j;
  j["schema"] = "icoq-report/1";
  j["kind"] = "singularity";
  j["type"] = r.type_string();
  j["n"] = r.n;
  j["multiplicity"] = r.multiplicity;
  j["milnor"] = r.milnor;
  j["delta"] = r.delta;
  j["quadratic_rank"] = r.quadratic_rank;
  j["variables"] = vars;
  j["point"] = point;
  j["field"] = field;
  return j;
}

int run_verify(const std::string& suite, const std::string& format, const std::string& out,
               bool parallel, bool no_timing, const std::string& emit) {
  using namespace icoq;
  if (!emit.empty()) {
    if (emit != "poly")
      fail("SyntaxError", "unknown --emit payload '" + emit + "' (expected 'poly')");
    if (suite != "invariants")
      fail("SyntaxError", "--emit poly is defined for the invariants suite");
    VerificationReport r = run_suite(suite);
    emit_report(invariants_poly_dump(), out);
    return r.failed() ? kExitFail : kExitPass;
  }
  VerificationReport r = (suite == "all") ? run_all(parallel) : run_suite(suite);
  std::string payload = (format == "json") ? report_json(r, no_timing) : report_text(r, no_timing);
  emit_report(payload, out);
  return r.failed() ? kExitFail : kExitPass;
}

int run_classify(const std::string& curve_path, const std::string& point_text,
                 const std::string& field_text) {
  using namespace icoq;
  std::string text = read_file(curve_path);
  // strip trailing whitespace/newlines
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  std::vector<std::string> vars = infer_variables(text);
  std::vector<std::string> coords = split_point(point_text);

  SingularityReport rep;
  if (field_text.empty()) {
    MultiPoly<Rational> f = qparse(vars, text);
    std::vector<Rational> p = {Rational::parse(coords[0]), Rational::parse(coords[1])};
    rep = classify(germ_localize(f, p));
  } else {
    FieldPtr field = NumberField::make(minpoly_coeffs(field_text), "t");
    MultiPoly<NFElem> f = nfparse(vars, field, text);
    std::vector<NFElem> p = {NFElem::parse(field, coords[0]), NFElem::parse(field, coords[1])};
    rep = classify(germ_localize(f, p));
  }
  std::cout << report_to_json(rep, vars, coords, field_text.empty() ? "rational" : field_text)
                   .dump(2)
            << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for the icosahedral birational-geometry computations"};
  app.require_subcommand(1);

  std::string suite, format = "text", out, emit;
  bool parallel = false, no_timing = false;
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name (or 'all')")->required();
  verify->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out, "Write the report to a file instead of stdout");
  verify->add_flag("--parallel", parallel, "Run the suites of 'all' concurrently");
  verify->add_flag("--no-timing", no_timing, "Zero the elapsed-time fields");
  verify->add_option("--emit", emit, "Extra payload: 'poly' dumps the derived invariants");

  std::string curve_path, point_text, field_text;
  CLI::App* classify = app.add_subcommand("classify", "Classify a plane-curve point");
  classify->add_option("--curve", curve_path, "File holding the curve polynomial")->required();
  classify->add_option("--point", point_text, "Coordinates \"a,b\"")->required();
  classify->add_option("--field", field_text, "Monic integer minimal polynomial in t");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (verify->parsed()) return run_verify(suite, format, out, parallel, no_timing, emit);
    return run_classify(curve_path, point_text, field_text);
  } catch (const icoq::Error& e) {
    std::fprintf(stderr, "icoq: %s\n", e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "icoq: internal error: %s\n", e.what());
    return kExitInternal;
  }
}
