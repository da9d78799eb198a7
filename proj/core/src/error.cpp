#include "saturate/error.hpp"

namespace saturate {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NoEmbedding: return "NoEmbedding";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::CharTooSmall: return "CharTooSmall";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::NotUnipotent: return "NotUnipotent";
    case ErrorKind::SingularGenerator: return "SingularGenerator";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::WeightLatticeMismatch: return "WeightLatticeMismatch";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::WrongField: return "WrongField";
    case ErrorKind::DegenerateField: return "DegenerateField";
    case ErrorKind::RootFindingFailure: return "RootFindingFailure";
    case ErrorKind::BadDenominator: return "BadDenominator";
    case ErrorKind::EllEqualsP: return "EllEqualsP";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::ManifestError: return "ManifestError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail) {}

}  // namespace saturate
