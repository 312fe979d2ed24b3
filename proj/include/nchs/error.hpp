#pragma once

#include <stdexcept>
#include <string>

namespace nchs {

// Each error class maps onto one CLI exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 1; }
};

/// Malformed input: unparsable files, unknown symbols, violated preconditions.
class InputError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

/// A truncated computation was asked for words beyond what its inputs determine.
class BoundError : public InputError {
 public:
  using InputError::InputError;
};

/// A mathematical check failed: mismatch between independent routes, singular system, ...
class MathError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 1; }
};

/// A configured resource cap was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

}  // namespace nchs
