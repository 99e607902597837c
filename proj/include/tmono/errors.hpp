#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tmono {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed tournament text. Coordinates are 0-based; -1 when not applicable.
class ParseError : public Error {
 public:
  // row/col are 0-based matrix coordinates; -1 when not applicable (header errors).
  ParseError(const std::string& what, long row = -1, long col = -1)
      : Error(what), row_(row), col_(col) {}

  long row() const noexcept { return row_; }
  long col() const noexcept { return col_; }

 private:
  long row_;
  long col_;
};

// An operation was called outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Input that is well formed but deliberately not supported (prime powers,
// instance sizes above a brute-force bound).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// A rational computation that was required to land in the integers did not.
class IntegralityError : public Error {
 public:
  using Error::Error;
};

// A structural decision and its spectral cross-check disagreed.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace tmono
