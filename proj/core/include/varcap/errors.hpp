#pragma once

#include <stdexcept>
#include <string>

namespace varcap {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mismatched variable counts / vector lengths.
struct DimensionError : Error {
  using Error::Error;
};

/// Mixing incompatible coefficient fields or variable counts in arithmetic.
struct FieldError : Error {
  using Error::Error;
};

/// Malformed polynomial / point / config text.
struct ParseError : Error {
  using Error::Error;
};

/// Bad run configuration (schema violations).
struct ConfigError : Error {
  using Error::Error;
};

/// Floating-point breakdown: singular solves, non-finite values, LP failure.
struct NumericalError : Error {
  using Error::Error;
};

/// A structural hypothesis of the construction failed (repeated points at
/// infinity, rank-deficient module generators, failed certification).
struct StructureError : Error {
  using Error::Error;
};

}  // namespace varcap
