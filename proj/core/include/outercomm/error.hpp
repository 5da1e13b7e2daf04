#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace outercomm {

/// Base class of every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (e.g. moebius(0)).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// Variety parameters outside the range the multiplier formula covers.
class UnsupportedVarietyError : public Error {
 public:
  using Error::Error;
};

/// Raised by the outer-commutator decider for (c1, c2) = (1, 1); the caller
/// must use the metabelian decider instead.
class MetabelianRouteError : public UnsupportedVarietyError {
 public:
  using UnsupportedVarietyError::UnsupportedVarietyError;
};

class InvalidGroupError : public Error {
 public:
  using Error::Error;
};

class InvalidElementError : public Error {
 public:
  using Error::Error;
};

/// The requested operation is not defined for this input (e.g. an infinite group
/// passed to a finite-only routine).
class UnsupportedInputError : public Error {
 public:
  using Error::Error;
};

/// Group literal syntax error. `position()` is a 0-based offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A mathematical identity the implementation relies on failed to hold.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace outercomm
