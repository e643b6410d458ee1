#pragma once

#include <stdexcept>
#include <string>

namespace commutant {

/// Process exit codes used by the CLI. Library code throws the matching
/// exception types; the driver maps them.
enum class ExitCode : int {
  ok = 0,
  parse = 2,
  validation = 3,
  resource = 4,
  internal = 5,
};

/// Malformed input document (chain file, cached basis, polynomial text).
class ParseError : public std::runtime_error {
public:
  ParseError(std::string code, std::string msg, int line = 0, int column = 0)
      : std::runtime_error(format(code, msg, line, column)),
        code_(std::move(code)), line_(line), column_(column) {}

  const std::string& code() const { return code_; }
  int line() const { return line_; }
  int column() const { return column_; }

private:
  static std::string format(const std::string& code, const std::string& msg,
                            int line, int column) {
    std::string s = code;
    if (line > 0) {
      s += " at line " + std::to_string(line);
      if (column > 0) s += ", column " + std::to_string(column);
    }
    s += ": " + msg;
    return s;
  }
  std::string code_;
  int line_;
  int column_;
};

/// Structural invariant of a chain failed (Jacobi, subalgebra closure, ...).
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configured budget was exceeded. Always a hard stop, never a truncated
/// answer.
class ResourceError : public std::runtime_error {
public:
  ResourceError(const std::string& what_blew_up, unsigned long long needed,
                unsigned long long budget)
      : std::runtime_error(what_blew_up + ": needs " + std::to_string(needed) +
                           ", budget " + std::to_string(budget)),
        needed_(needed), budget_(budget) {}

  unsigned long long needed() const { return needed_; }
  unsigned long long budget() const { return budget_; }

private:
  unsigned long long needed_;
  unsigned long long budget_;
};

/// Violated internal postcondition (e.g. a solver result failed its exact
/// re-verification).
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace commutant
