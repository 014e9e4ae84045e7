#pragma once

#include <stdexcept>
#include <string>

namespace mvis {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: out-of-range ids, loops, malformed parameters.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An operation defined only for connected graphs received a disconnected one.
class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

/// Graph or product larger than the configured vertex capacity.
class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

/// A construction's precondition (feasibility, block-graph shape, ...) failed.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed edge-list, recipe or certificate text.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace mvis
