#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mvfix {

enum class ErrorCode {
  // metric-core
  DimensionMismatch,
  OutOfDomain,
  IndexOutOfRange,
  NonFinite,
  NotMetricallyConvex,
  DegeneratePair,
  // hausdorff
  EmptySet,
  SizeLimitExceeded,
  // gauge
  MalformedPieces,
  NonPositiveP,
  InvalidGauge,
  // reduction
  DegenerateEpsilon,
  InvalidParameter,
  NonPositiveStep,
  PairTooFar,
  SamplerExhausted,
  // fixedpoint
  NotChainable,
  PointNotInSample,
  StepEscapedLocality,
  // scenario
  ParseError,
  SchemaError,
  ValidationError,
};

/// Coarse failure classes; the CLI maps each to its exit code.
enum class ErrorClass {
  Parse = 1,
  Validation = 2,
  Runtime = 3,
  Verification = 4,
};

std::string_view to_string(ErrorCode code);
ErrorClass classify(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mvfix
