#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chowforge {

enum class ErrorCode {
  kZeroDenominator,
  kPoleAtPoint,
  kZeroPolynomial,
  kUnknownGenerator,
  kNonterminatingHint,
  kInhomogeneousRelations,
  kNotReduced,
  kBadN,
  kBadIndex,
  kUnknownSection,
  kShapeMismatch,
  kNotSquare,
  kBadGenus,
  kPointAtChartBoundary,
  kFieldMismatch,
  kBoundViolated,
  kSamplingExhausted,
  kMissingGolden,
  kConfig,
};

std::string_view error_code_name(ErrorCode code);

// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace chowforge
