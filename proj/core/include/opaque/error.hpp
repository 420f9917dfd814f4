#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace opaque {

/// Raised when an operation's precondition is violated (bad angle, empty
/// instance, malformed weight, ...). The CLI maps it to exit code 2.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the text readers. `where` names the offending element, e.g.
/// "segments[3].bx" or "byte 118".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace opaque
