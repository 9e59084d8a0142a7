#include "renewscen/error.hpp"

namespace renewscen {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonPositiveValue: return "NonPositiveValue";
    case ErrorCode::DuplicateYear: return "DuplicateYear";
    case ErrorCode::UnitMismatch: return "UnitMismatch";
    case ErrorCode::EmptySeries: return "EmptySeries";
    case ErrorCode::UnknownConstant: return "UnknownConstant";
    case ErrorCode::NegativeDemand: return "NegativeDemand";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::YearBeforeWindow: return "YearBeforeWindow";
    case ErrorCode::NonGrowingSeries: return "NonGrowingSeries";
    case ErrorCode::CapacityFactorOutOfRange: return "CapacityFactorOutOfRange";
    case ErrorCode::NonPositiveDensity: return "NonPositiveDensity";
    case ErrorCode::EmptyCombination: return "EmptyCombination";
    case ErrorCode::NonMonotoneProjection: return "NonMonotoneProjection";
    case ErrorCode::ParallelGrowth: return "ParallelGrowth";
    case ErrorCode::PositiveSlope: return "PositiveSlope";
    case ErrorCode::NonPositiveX: return "NonPositiveX";
    case ErrorCode::ParallelLines: return "ParallelLines";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::DatasetMissing: return "DatasetMissing";
    case ErrorCode::MissingFit: return "MissingFit";
  }
  return "UnknownError";
}

ErrorCategory category_of(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ConfigInvalid:
    case ErrorCode::MissingFit:
      return ErrorCategory::Config;
    case ErrorCode::ParseError:
    case ErrorCode::NonPositiveValue:
    case ErrorCode::DuplicateYear:
    case ErrorCode::UnitMismatch:
    case ErrorCode::EmptySeries:
    case ErrorCode::DatasetMissing:
      return ErrorCategory::Data;
    default:
      return ErrorCategory::Model;
  }
}

}  // namespace renewscen
