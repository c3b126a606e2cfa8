#pragma once

#include <stdexcept>
#include <string>

namespace zdg {

/// Malformed input text (semiring file, matrix literal, builtin descriptor).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  explicit ParseError(const std::string& msg)
      : std::runtime_error(msg), line_(0) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Operation tables or derived structures are malformed (e.g. entry >= m).
/// Distinct from an axiom failure, which is reported, not thrown.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured cap or search budget was exceeded. Never carries a partial
/// answer.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zdg
