#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace folium {

enum class ErrorCode {
  DivisionByZero,
  MixedFields,
  InvalidField,
  FieldTooLargeForScan,
  ZeroParameter,
  InvalidPoint,
  NotOnCurve,
  ParameterAtInfinity,
  OriginNotInGroup,
  OriginNotAllowed,
  FieldLacksUniqueCubeRoot,
  PointAtInfinity,
  CoincidentPoints,
  SingularPoint,
  LineThroughOrigin,
  VertexNotAllowed,
  UnorderedField,
  DivisionByZeroPoint,
  CharacteristicTwo,
  UnknownSuite,
  UnknownLaw,
  ParseError,
  DegenerateRange,
  FileWriteError,
  InvariantViolation,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::FieldTooLargeForScan: return "FieldTooLargeForScan";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::NotOnCurve: return "NotOnCurve";
    case ErrorCode::ParameterAtInfinity: return "ParameterAtInfinity";
    case ErrorCode::OriginNotInGroup: return "OriginNotInGroup";
    case ErrorCode::OriginNotAllowed: return "OriginNotAllowed";
    case ErrorCode::FieldLacksUniqueCubeRoot: return "FieldLacksUniqueCubeRoot";
    case ErrorCode::PointAtInfinity: return "PointAtInfinity";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::LineThroughOrigin: return "LineThroughOrigin";
    case ErrorCode::VertexNotAllowed: return "VertexNotAllowed";
    case ErrorCode::UnorderedField: return "UnorderedField";
    case ErrorCode::DivisionByZeroPoint: return "DivisionByZeroPoint";
    case ErrorCode::CharacteristicTwo: return "CharacteristicTwo";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::UnknownLaw: return "UnknownLaw";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DegenerateRange: return "DegenerateRange";
    case ErrorCode::FileWriteError: return "FileWriteError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace folium
