#include "chowforge/error.hpp"

namespace chowforge {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroDenominator: return "ZeroDenominator";
    case ErrorCode::kPoleAtPoint: return "PoleAtPoint";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kUnknownGenerator: return "UnknownGenerator";
    case ErrorCode::kNonterminatingHint: return "NonterminatingHint";
    case ErrorCode::kInhomogeneousRelations: return "InhomogeneousRelations";
    case ErrorCode::kNotReduced: return "NotReduced";
    case ErrorCode::kBadN: return "BadN";
    case ErrorCode::kBadIndex: return "BadIndex";
    case ErrorCode::kUnknownSection: return "UnknownSection";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kNotSquare: return "NotSquare";
    case ErrorCode::kBadGenus: return "BadGenus";
    case ErrorCode::kPointAtChartBoundary: return "PointAtChartBoundary";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kBoundViolated: return "BoundViolated";
    case ErrorCode::kSamplingExhausted: return "SamplingExhausted";
    case ErrorCode::kMissingGolden: return "MissingGolden";
    case ErrorCode::kConfig: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace chowforge
