#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace icoq {

struct Check {
  std::string id;
  std::string citation;
  std::string status;  // "pass", "fail", or "flagged"
  std::string expected;
  std::string computed;
  long elapsed_ms = 0;
};

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;

  bool failed() const;
  std::string overall() const;  // "fail" iff any check failed, else "pass"
};

// Appends timed checks to a report. Status is "pass"/"fail" from the ok flag,
// except in flagged mode where a mismatch is recorded as "flagged" — reserved
// for discrepancies in the published source, never counted as a failure.
class CheckRecorder {
 public:
  explicit CheckRecorder(VerificationReport& r);

  void add(const std::string& id, const std::string& citation, bool ok,
           const std::string& expected, const std::string& computed);
  void add_flagged(const std::string& id, const std::string& citation, bool matches,
                   const std::string& expected, const std::string& computed);
  // Wraps a whole block: any Error surfaces as a single failing check.
  template <class F>
  void guarded(const std::string& id, const std::string& citation, F&& body);

 private:
  long take_elapsed();
  VerificationReport& report_;
  std::chrono::steady_clock::time_point mark_;
};

std::string report_json(const VerificationReport& r, bool no_timing);
std::string report_text(const VerificationReport& r, bool no_timing);

// Write to the path, or to stdout when the path is empty or "-". IoError on
// an unwritable destination.
void emit_report(const std::string& content, const std::string& out_path);

template <class F>
void CheckRecorder::guarded(const std::string& id, const std::string& citation, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    add(id, citation, false, "no error", std::string("error: ") + e.what());
  }
}

}  // namespace icoq
