#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace icoq {

// Every contract violation throws this; `code()` is a stable machine-checkable
// name ("FieldMismatch", "ReduciblePolynomial", ...), `what()` adds context.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& detail) {
  throw Error(std::move(code), detail);
}

}  // namespace icoq
