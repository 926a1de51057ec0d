#pragma once

#include <stdexcept>
#include <string>

namespace cyclotorsion {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Raised when an operation would need a cyclotomic level above the configured limit.
class LevelOverflow : public Error {
 public:
  using Error::Error;
};

class InvalidGaloisMap : public Error {
 public:
  using Error::Error;
};

/// Zero determinant in a Möbius matrix.
class DegenerateMap : public Error {
 public:
  using Error::Error;
};

/// Two curves share a component, so their intersection is not finite.
class CommonComponent : public Error {
 public:
  using Error::Error;
};

/// The exponent lattice of a curve has the wrong rank for the requested operation.
class RankError : public Error {
 public:
  using Error::Error;
};

/// A bound or count could not be certified exactly (e.g. both curves singular at a shared point).
class NotCertified : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace cyclotorsion
