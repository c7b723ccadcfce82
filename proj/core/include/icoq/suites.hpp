#pragma once

#include <string>
#include <vector>

#include "icoq/report.hpp"

namespace icoq {

// The verification suites in their canonical run order.
const std::vector<std::string>& suite_names();

// Run one suite ("all" aggregates every suite in canonical order).
// UnknownSuite for anything else. Internal errors inside a suite surface as a
// failing check, never as an exception.
VerificationReport run_suite(const std::string& name);
VerificationReport run_all(bool parallel);

// Text dump of the derived degree-10 and degree-15 invariants (the --emit
// poly payload of the invariants suite).
std::string invariants_poly_dump();

}  // namespace icoq
