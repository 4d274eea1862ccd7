#include "edgepoly/error.hpp"

namespace edgepoly {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParameters: return "invalid-parameters";
    case ErrorCode::InvalidInput: return "invalid-input";
    case ErrorCode::NotATree: return "not-a-tree";
    case ErrorCode::DegreeSumMismatch: return "degree-sum-mismatch";
    case ErrorCode::InstanceTooLarge: return "instance-too-large";
    case ErrorCode::DimensionTooLarge: return "dimension-too-large";
    case ErrorCode::InvalidVeroneseParameters: return "invalid-veronese-parameters";
    case ErrorCode::EnumerationBudgetExceeded: return "enumeration-budget-exceeded";
    case ErrorCode::NotPseudoGorenstein: return "not-pseudo-gorenstein";
    case ErrorCode::NotAnInteriorPoint: return "not-an-interior-point";
    case ErrorCode::EmptyInterior: return "empty-interior";
    case ErrorCode::HypothesisViolated: return "hypothesis-violated";
    case ErrorCode::ArithmeticOverflow: return "arithmetic-overflow";
  }
  return "unknown";
}

void fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(to_string(code)) + ": " + what);
}

}  // namespace edgepoly
