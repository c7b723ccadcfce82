#include "icoq/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "icoq/errors.hpp"
#include "json.hpp"

namespace icoq {

bool VerificationReport::failed() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.status == "fail"; });
}

std::string VerificationReport::overall() const { return failed() ? "fail" : "pass"; }

CheckRecorder::CheckRecorder(VerificationReport& r)
    : report_(r), mark_(std::chrono::steady_clock::now()) {}

long CheckRecorder::take_elapsed() {
  auto now = std::chrono::steady_clock::now();
  long ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(now - mark_).count());
  mark_ = now;
  return ms;
}

void CheckRecorder::add(const std::string& id, const std::string& citation, bool ok,
                        const std::string& expected, const std::string& computed) {
  report_.checks.push_back(
      Check{id, citation, ok ? "pass" : "fail", expected, computed, take_elapsed()});
}

void CheckRecorder::add_flagged(const std::string& id, const std::string& citation,
                                bool matches, const std::string& expected,
                                const std::string& computed) {
  report_.checks.push_back(
      Check{id, citation, matches ? "pass" : "flagged", expected, computed, take_elapsed()});
}

std::string report_json(const VerificationReport& r, bool no_timing) {
  nlohmann::ordered_json j;
  j["schema"] = "icoq-report/1";
  j["suite"] = r.suite;
  j["status"] = r.overall();
  j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : r.checks) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["citation"] = c.citation;
    jc["status"] = c.status;
    jc["expected"] = c.expected;
    jc["computed"] = c.computed;
    jc["elapsed_ms"] = no_timing ? 0 : c.elapsed_ms;
    j["checks"].push_back(std::move(jc));
  }
  return j.dump(2) + "\n";
}

namespace {

std::string clip(const std::string& s, std::size_t width) {
  if (s.size() <= width) return s;
  return s.substr(0, width - 3) + "...";
}

std::string pad(const std::string& s, std::size_t width) {
  std::string out = s;
  if (out.size() < width) out.append(width - out.size(), ' ');
  return out;
}

}  // namespace

std::string report_text(const VerificationReport& r, bool no_timing) {
  constexpr std::size_t kValueWidth = 44;
  std::size_t id_w = 5, cite_w = 8, status_w = 7;
  std::size_t exp_w = 8, comp_w = 8;
  for (const Check& c : r.checks) {
    id_w = std::max(id_w, c.id.size());
    cite_w = std::max(cite_w, c.citation.size());
    exp_w = std::max(exp_w, std::min(c.expected.size(), kValueWidth));
    comp_w = std::max(comp_w, std::min(c.computed.size(), kValueWidth));
  }
  std::string out;
  out += "suite: " + r.suite + "    status: " + r.overall() + "\n";
  out += pad("check", id_w) + "  " + pad("status", status_w) + "  " + pad("citation", cite_w) +
         "  " + pad("expected", exp_w) + "  " + pad("computed", comp_w) + "  ms\n";
  out += std::string(id_w, '-') + "  " + std::string(status_w, '-') + "  " +
         std::string(cite_w, '-') + "  " + std::string(exp_w, '-') + "  " +
         std::string(comp_w, '-') + "  ----\n";
  for (const Check& c : r.checks) {
    char ms[32];
    std::snprintf(ms, sizeof(ms), "%ld", no_timing ? 0L : c.elapsed_ms);
    out += pad(c.id, id_w) + "  " + pad(c.status, status_w) + "  " + pad(c.citation, cite_w) +
           "  " + pad(clip(c.expected, kValueWidth), exp_w) + "  " +
           pad(clip(c.computed, kValueWidth), comp_w) + "  " + ms + "\n";
  }
  std::size_t passes = 0, fails = 0, flags = 0;
  for (const Check& c : r.checks) {
    if (c.status == "pass") ++passes;
    else if (c.status == "fail") ++fails;
    else ++flags;
  }
  out += std::to_string(r.checks.size()) + " checks: " + std::to_string(passes) + " passed, " +
         std::to_string(fails) + " failed, " + std::to_string(flags) + " flagged\n";
  return out;
}

void emit_report(const std::string& content, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) fail("IoError", "cannot open output file: " + out_path);
  f << content;
  f.flush();
  if (!f) fail("IoError", "write failed: " + out_path);
}

}  // namespace icoq
