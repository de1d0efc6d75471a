#pragma once

#include <stdexcept>
#include <string>

namespace ifc {

// Base of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: NaN, unordered interval, bad breakpoint list, bad JSON.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates an operation's precondition
// (domain mismatch, non-H-continuous argument, empty family, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace ifc
