#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "icoq/errors.hpp"
#include "icoq/report.hpp"
#include "icoq/suites.hpp"
#include "json.hpp"

using namespace icoq;

namespace {

#ifndef ICOQ_CLI_PATH
#error "ICOQ_CLI_PATH must point at the command-line binary"
#endif

std::string scratch_path(const std::string& tag) {
  return "/tmp/icoq_clitest_" + std::to_string(static_cast<long>(getpid())) + "_" + tag;
}

int run_cli(const std::string& args, const std::string& out_file) {
  std::string cmd = std::string(ICOQ_CLI_PATH) + " " + args + " >" + out_file + " 2>&1";
  int st = std::system(cmd.c_str());
  REQUIRE(st != -1);
  REQUIRE(WIFEXITED(st));
  return WEXITSTATUS(st);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("suite names are fixed and ordered") {
  CHECK(suite_names() == std::vector<std::string>{"invariants", "discriminant", "characters",
                                                  "lefschetz", "subgroups", "dp5", "wps",
                                                  "singularities"});
  CHECK_THROWS_AS(run_suite("nope"), Error);
  try {
    run_suite("nope");
  } catch (const Error& e) {
    CHECK(std::string(e.code()) == "UnknownSuite");
  }
}

TEST_CASE("empty report renders as a passing skeleton") {
  VerificationReport r;
  r.suite = "demo";
  CHECK(!r.failed());
  CHECK(r.overall() == "pass");
  auto j = nlohmann::json::parse(report_json(r, true));
  CHECK(j.at("schema") == "icoq-report/1");
  CHECK(j.at("suite") == "demo");
  CHECK(j.at("status") == "pass");
  CHECK(j.at("checks").is_array());
  CHECK(j.at("checks").empty());
}

TEST_CASE("recorder statuses and the overall verdict") {
  VerificationReport r;
  r.suite = "demo";
  CheckRecorder rec(r);
  rec.add("a", "src-a", true, "1", "1");
  rec.add_flagged("b", "src-b", false, "x", "y");
  rec.add_flagged("c", "src-c", true, "z", "z");
  rec.guarded("d", "src-d", [] { fail("PinFailure", "boom"); });
  REQUIRE(r.checks.size() == 4);
  CHECK(r.checks[0].status == "pass");
  CHECK(r.checks[1].status == "flagged");
  CHECK(r.checks[2].status == "pass");
  CHECK(r.checks[3].status == "fail");
  CHECK(r.checks[3].computed.find("boom") != std::string::npos);
  CHECK(r.failed());
  CHECK(r.overall() == "fail");

  VerificationReport only_flagged;
  only_flagged.suite = "demo2";
  CheckRecorder rec2(only_flagged);
  rec2.add_flagged("b", "src-b", false, "x", "y");
  CHECK(!only_flagged.failed());
  CHECK(only_flagged.overall() == "pass");
}

TEST_CASE("reports are deterministic without timing") {
  for (const char* name : {"wps", "dp5"}) {
    VerificationReport a = run_suite(name);
    VerificationReport b = run_suite(name);
    CHECK(report_json(a, true) == report_json(b, true));
    CHECK(report_text(a, true) == report_text(b, true));
  }
}

TEST_CASE("json rendering of a real suite") {
  VerificationReport r = run_suite("wps");
  auto j = nlohmann::json::parse(report_json(r, true));
  CHECK(j.at("suite") == "wps");
  CHECK(j.at("status") == "pass");
  REQUIRE(j.at("checks").size() == 7);
  for (const auto& c : j.at("checks")) {
    CHECK(c.contains("id"));
    CHECK(c.contains("citation"));
    CHECK(c.contains("status"));
    CHECK(c.contains("expected"));
    CHECK(c.contains("computed"));
    CHECK(c.at("elapsed_ms") == 0);
  }
  CHECK(j.at("checks")[0].at("id") == "kvolume-fano3");
}

TEST_CASE("text rendering of a real suite") {
  VerificationReport r = run_suite("wps");
  std::string t = report_text(r, true);
  CHECK(t.rfind("suite: wps", 0) == 0);
  CHECK(t.find("7 checks: 7 passed, 0 failed, 0 flagged") != std::string::npos);
}

TEST_CASE("emit_report writes files and reports unwritable paths") {
  std::string path = scratch_path("emit.json");
  emit_report("payload\n", path);
  CHECK(slurp(path) == "payload\n");
  std::remove(path.c_str());
  CHECK_THROWS_AS(emit_report("x", "/nonexistent-dir/x.json"), Error);
  try {
    emit_report("x", "/nonexistent-dir/x.json");
  } catch (const Error& e) {
    CHECK(std::string(e.code()) == "IoError");
  }
}

TEST_CASE("command line: verify") {
  std::string out = scratch_path("verify.txt");
  CHECK(run_cli("verify wps --no-timing", out) == 0);
  CHECK(slurp(out).rfind("suite: wps", 0) == 0);

  CHECK(run_cli("verify wps --format json --no-timing", out) == 0);
  auto j = nlohmann::json::parse(slurp(out));
  CHECK(j.at("schema") == "icoq-report/1");
  CHECK(j.at("status") == "pass");

  std::string report_file = scratch_path("report.json");
  CHECK(run_cli("verify dp5 --format json --no-timing --out " + report_file, out) == 0);
  auto j2 = nlohmann::json::parse(slurp(report_file));
  CHECK(j2.at("suite") == "dp5");
  std::remove(report_file.c_str());

  CHECK(run_cli("verify nope", out) == 2);
  CHECK(run_cli("verify wps --format yaml", out) == 2);
  CHECK(run_cli("", out) == 2);
  CHECK(run_cli("verify wps --out /nonexistent-dir/x.json", out) == 4);
  std::remove(out.c_str());
}

TEST_CASE("command line: emit poly") {
  std::string out = scratch_path("poly.txt");
  CHECK(run_cli("verify invariants --emit poly", out) == 0);
  std::string text = slurp(out);
  CHECK(text.rfind("z10 = ", 0) == 0);
  CHECK(text.find("\nz15 = ") != std::string::npos);
  CHECK(run_cli("verify wps --emit poly", out) == 2);
  std::remove(out.c_str());
}

TEST_CASE("command line: classify") {
  std::string curve = scratch_path("curve.txt");
  std::string out = scratch_path("classify.txt");
  {
    std::ofstream f(curve);
    f << "y^2 - x^3\n";
  }
  CHECK(run_cli("classify --curve " + curve + " --point 0,0", out) == 0);
  auto j = nlohmann::json::parse(slurp(out));
  CHECK(j.at("schema") == "icoq-report/1");
  CHECK(j.at("kind") == "singularity");
  CHECK(j.at("type") == "A2");
  CHECK(j.at("milnor") == 2);
  CHECK(j.at("field") == "rational");
  CHECK(j.at("variables") == nlohmann::json::array({"x", "y"}));

  CHECK(run_cli("classify --curve " + curve + " --point 1,2", out) == 2);  // not on the curve
  CHECK(run_cli("classify --curve " + curve + " --point 1", out) == 2);
  CHECK(run_cli("classify --curve /nonexistent-dir/c.txt --point 0,0", out) == 4);

  {
    std::ofstream f(curve);
    f << "z5^2 - z4^3 + (t)*z4*z5^2\n";
  }
  CHECK(run_cli("classify --curve " + curve + " --point 0,0 --field \"t^3 - 5\"", out) == 0);
  auto j2 = nlohmann::json::parse(slurp(out));
  CHECK(j2.at("field") == "t^3 - 5");
  CHECK(j2.at("type") == "A2");
  CHECK(j2.at("variables") == nlohmann::json::array({"z4", "z5"}));

  std::remove(curve.c_str());
  std::remove(out.c_str());
}
