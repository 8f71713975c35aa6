#include "gkz/error.hpp"

namespace gkz {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DuplicatePoint: return "DuplicatePoint";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NonGenericHeights: return "NonGenericHeights";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::MissingVariable: return "MissingVariable";
    case ErrorKind::UnassignedVariable: return "UnassignedVariable";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::InvalidBasis: return "InvalidBasis";
    case ErrorKind::UnsupportedConfiguration: return "UnsupportedConfiguration";
    case ErrorKind::InputParseError: return "InputParseError";
  }
  return "Unknown";
}

}  // namespace gkz
