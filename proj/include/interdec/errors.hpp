#pragma once

#include <stdexcept>
#include <string>

namespace interdec {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree (matrix products, families of vectors, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input: rationals, JSON documents, schema violations.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace interdec
