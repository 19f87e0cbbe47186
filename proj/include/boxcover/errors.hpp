#pragma once

#include <stdexcept>
#include <string>

namespace boxcover {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: out-of-range ids, wrong fiber widths, disconnected
/// inputs where connectivity is required.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Removing some edge disconnects the graph.
class NotTwoConnected : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A wall structure was requested on a pair that is not a Z/2-pair.
class NotZ2Pair : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// The operation needs a materialized level and was handed an implicit one.
class UnsupportedOnImplicit : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Never raised on valid input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace boxcover
