#pragma once

#include <stdexcept>
#include <string>

namespace qlayout {

// Input text could not be parsed. line() is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message, int line_number = 0)
      : std::runtime_error(line_number > 0
                               ? "line " + std::to_string(line_number) + ": " + message
                               : message),
        line_(line_number) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

// A configured capacity was exceeded (search cap, canonicalization cap,
// value materialization guard). The operation is well-defined but refuses
// to run at this size.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A self-check failed. Indicates a bug, never a property of the input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qlayout
