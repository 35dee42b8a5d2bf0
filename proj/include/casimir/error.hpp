#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

enum class ErrorKind {
  parse,
  domain,
  arity,
  unsupported_argument,
  precondition,
  dimension,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the ErrorKind tags so the
/// C API and the CLI can map it onto a status code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace casimir
