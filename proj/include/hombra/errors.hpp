#pragma once

#include <stdexcept>
#include <string>

namespace hombra {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& where) : Error("division by zero at " + where) {}
};

struct DimensionMismatch : Error {
  using Error::Error;
};

/// A precondition on the mathematical input does not hold (not a morphism, not a group, ...).
struct HypothesisFailed : Error {
  using Error::Error;
};

struct TruncationExceeded : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace hombra
