#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgepoly {

using Coord = std::int64_t;
using Point = std::vector<Coord>;

enum class ErrorCode {
  InvalidParameters,
  InvalidInput,
  NotATree,
  DegreeSumMismatch,
  InstanceTooLarge,
  DimensionTooLarge,
  InvalidVeroneseParameters,
  EnumerationBudgetExceeded,
  NotPseudoGorenstein,
  NotAnInteriorPoint,
  EmptyInterior,
  HypothesisViolated,
  ArithmeticOverflow,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for errors caused by a configured size cap rather than bad input.
  bool is_budget() const noexcept {
    return code_ == ErrorCode::InstanceTooLarge ||
           code_ == ErrorCode::DimensionTooLarge ||
           code_ == ErrorCode::EnumerationBudgetExceeded;
  }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace edgepoly
