#pragma once

#include <stdexcept>
#include <string>

namespace gkdim {

// A caller broke an operation contract (mismatched variable sets, a
// non-monic divisor set, cofactors on a letter-leading relation, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rejected input text. Positions are 1-based; column 0 means "whole line".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(message + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A configurable budget ran out before the computation finished.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gkdim
