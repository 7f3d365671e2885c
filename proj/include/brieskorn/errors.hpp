#pragma once

#include <stdexcept>
#include <string>

namespace brieskorn {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain arguments (bad tuple entries, non-period T, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Tuple length outside the range an operation supports.
class UnsupportedLength : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// The input is well formed but violates an operation's precondition.
class PreconditionError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A configurable enumeration or counting cap was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// File could not be opened, read, or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagreed.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace brieskorn
