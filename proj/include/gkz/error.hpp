#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gkz {

enum class ErrorKind {
  InvalidInput,
  DuplicatePoint,
  DuplicateLabel,
  NotFullDimensional,
  IndexOutOfRange,
  DegenerateSimplex,
  CapExceeded,
  NonGenericHeights,
  ZeroPolynomial,
  MissingVariable,
  UnassignedVariable,
  InexactDivision,
  InvalidBasis,
  UnsupportedConfiguration,
  InputParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported as an Error carrying
/// a machine-readable kind; the CLI maps kinds onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gkz
