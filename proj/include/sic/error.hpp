#pragma once

#include <stdexcept>
#include <string>

namespace sic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (graph files, witness files, weight files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation refused because its input exceeds a configured size cap.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// Caller-side contract violation: bad parameters, unmet lemma hypotheses.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A self-check failed inside the library. Always a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace sic
