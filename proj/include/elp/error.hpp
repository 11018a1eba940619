#pragma once

#include <stdexcept>
#include <string>

namespace elp {

// Base of every error the library reports.  The CLI maps the subclasses to
// exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Input is well formed but outside what a given operation accepts
// (non-ground formula, non-program theory passed to a program-only
// semantics, ...).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// A configurable resource cap was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace elp
