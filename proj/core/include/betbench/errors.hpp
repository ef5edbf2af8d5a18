#pragma once

#include <stdexcept>
#include <string>

namespace betbench {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input parsed but violates a domain invariant (duplicate item, empty bucket, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Input could not be parsed (bad JSON, unknown label, wrong field type).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An external scorer broke the line protocol, timed out, or exited.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

/// A ground-truth derivation hit a state the benchmark construction rules out.
class OracleError : public Error {
 public:
  using Error::Error;
};

}  // namespace betbench
