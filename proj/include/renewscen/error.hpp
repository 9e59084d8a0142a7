#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace renewscen {

enum class ErrorCode {
  // corpus
  ParseError,
  NonPositiveValue,
  DuplicateYear,
  UnitMismatch,
  EmptySeries,
  UnknownConstant,
  NegativeDemand,
  // growthfit
  TooFewPoints,
  DegreeZero,
  YearBeforeWindow,
  NonGrowingSeries,
  // genconvert / resourcebudget
  CapacityFactorOutOfRange,
  NonPositiveDensity,
  // scenario
  EmptyCombination,
  NonMonotoneProjection,
  ParallelGrowth,
  // learncurve
  PositiveSlope,
  NonPositiveX,
  ParallelLines,
  // reportcli
  ConfigInvalid,
  DatasetMissing,
  MissingFit,
};

/// Coarse grouping used for CLI exit codes.
enum class ErrorCategory { Config, Data, Model };

std::string_view to_string(ErrorCode code) noexcept;
ErrorCategory category_of(ErrorCode code) noexcept;

/// Process exit status: 2 config, 3 data, 4 model.
constexpr int exit_code(ErrorCategory category) noexcept {
  switch (category) {
    case ErrorCategory::Config: return 2;
    case ErrorCategory::Data: return 3;
    case ErrorCategory::Model: return 4;
  }
  return 4;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return category_of(code_); }

 private:
  ErrorCode code_;
};

}  // namespace renewscen
