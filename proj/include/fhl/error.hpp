#pragma once

#include <stdexcept>
#include <string>

namespace fhl {

// Base of every error raised by the library. Callers that only care about
// "the computation failed" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class ConductorMismatch : public Error {
 public:
  ConductorMismatch(int m1, int m2)
      : Error("conductor mismatch: " + std::to_string(m1) + " vs " + std::to_string(m2)) {}
};

// Precondition on an argument violated (bad index, wrong degree, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input. `where` is a human-readable location.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, const std::string& where)
      : Error("parse error at " + where + ": " + what), detail_(what), where_(where) {}
  const std::string& detail() const { return detail_; }
  const std::string& where() const { return where_; }

 private:
  std::string detail_;
  std::string where_;
};

}  // namespace fhl
