#pragma once

#include <stdexcept>
#include <string>

namespace torusjump {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Operands built over different rings (or coefficient domains) were mixed.
class RingMismatchError : public Error {
public:
  using Error::Error;
};

// Input is outside the operation's domain: division by zero, non-integer
// where an integer is required, a zero coordinate offered as a torus point.
class DomainError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

// A configured cap (degree, basis size, minor count) was exceeded.
class ResourceLimitError : public Error {
public:
  using Error::Error;
};

// Matrix shapes do not line up for the requested operation.
class ShapeError : public Error {
public:
  using Error::Error;
};

// A differential pair fails d^{i+1} * d^i = 0 at the given degree.
class ComplexConditionError : public Error {
public:
  ComplexConditionError(int degree, const std::string& what)
      : Error(what), degree(degree) {}
  int degree;
};

// Input shape is recognized but deliberately out of scope.
class UnsupportedError : public Error {
public:
  using Error::Error;
};

}  // namespace torusjump
