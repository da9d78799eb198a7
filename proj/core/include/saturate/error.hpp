#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace saturate {

/// Failure categories raised across the library. The CLI maps each one to a
/// structured witness object, so the names are part of the report format.
enum class ErrorKind {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  FieldTooLarge,
  FieldMismatch,
  NoEmbedding,
  DivisionByZero,
  CharTooSmall,
  NotNilpotent,
  NotUnipotent,
  SingularGenerator,
  DimensionMismatch,
  OrderCapExceeded,
  EnumerationBudgetExceeded,
  InvalidType,
  WeightLatticeMismatch,
  NotDominant,
  NotMonic,
  WrongField,
  DegenerateField,
  RootFindingFailure,
  BadDenominator,
  EllEqualsP,
  HypothesisViolated,
  UnknownCommand,
  MalformedInput,
  ManifestError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace saturate
