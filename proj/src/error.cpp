#include "mvfix/error.hpp"

namespace mvfix {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NotMetricallyConvex: return "NotMetricallyConvex";
    case ErrorCode::DegeneratePair: return "DegeneratePair";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::MalformedPieces: return "MalformedPieces";
    case ErrorCode::NonPositiveP: return "NonPositiveP";
    case ErrorCode::InvalidGauge: return "InvalidGauge";
    case ErrorCode::DegenerateEpsilon: return "DegenerateEpsilon";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::NonPositiveStep: return "NonPositiveStep";
    case ErrorCode::PairTooFar: return "PairTooFar";
    case ErrorCode::SamplerExhausted: return "SamplerExhausted";
    case ErrorCode::NotChainable: return "NotChainable";
    case ErrorCode::PointNotInSample: return "PointNotInSample";
    case ErrorCode::StepEscapedLocality: return "StepEscapedLocality";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "UnknownError";
}

ErrorClass classify(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::SchemaError:
      return ErrorClass::Parse;
    case ErrorCode::DimensionMismatch:
    case ErrorCode::OutOfDomain:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::NonFinite:
    case ErrorCode::EmptySet:
    case ErrorCode::MalformedPieces:
    case ErrorCode::NonPositiveP:
    case ErrorCode::InvalidGauge:
    case ErrorCode::DegenerateEpsilon:
    case ErrorCode::InvalidParameter:
    case ErrorCode::NonPositiveStep:
    case ErrorCode::ValidationError:
      return ErrorClass::Validation;
    case ErrorCode::NotMetricallyConvex:
    case ErrorCode::DegeneratePair:
    case ErrorCode::SizeLimitExceeded:
    case ErrorCode::PairTooFar:
    case ErrorCode::SamplerExhausted:
    case ErrorCode::NotChainable:
    case ErrorCode::PointNotInSample:
    case ErrorCode::StepEscapedLocality:
      return ErrorClass::Runtime;
  }
  return ErrorClass::Runtime;
}

}  // namespace mvfix
