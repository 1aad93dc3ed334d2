#pragma once

#include <stdexcept>
#include <string>

namespace zpcheck {

// Base for every error raised by the library. The CLI maps all of them to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-domain input (bad vertex index, invalid parameters, parse failures).
class InputError : public Error {
 public:
  using Error::Error;
};

// A query outside the range where a result is known to be valid.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Exact integer arithmetic would leave int64.
class OverflowError : public RangeError {
 public:
  using RangeError::RangeError;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public InputError {
 public:
  using InputError::InputError;
};

// Fewer than two ideal generators: no relation among relations exists.
class NoRelationsError : public Error {
 public:
  using Error::Error;
};

}  // namespace zpcheck
