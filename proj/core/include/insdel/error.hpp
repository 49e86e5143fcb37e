#pragma once

#include <stdexcept>
#include <string>

namespace insdel {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// Malformed arguments: alphabet mismatch, ragged codes, out-of-range indices.
class InvalidInput : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invalid-input"; }
};

/// An exhaustive enumeration or search exceeded its node budget. The answer
/// is unknown, not false.
class ResourceLimit : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "resource-limit"; }
};

/// Division by zero and similar field-arithmetic faults.
class ArithmeticError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "arithmetic"; }
};

/// A code search or parameter wiring could not produce the requested object.
class ConstructionFailure : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "construction-failure"; }
};

/// Decoder parameters fail a soundness check at run time.
class ParameterError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "parameter"; }
};

/// The caller's combinatorial precondition was observed to be false.
class ContractViolation : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "contract-violation"; }
};

}  // namespace insdel
