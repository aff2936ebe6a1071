#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace brieskorn {

enum class ErrorCode {
  NotPairwiseCoprime,
  ValueTooSmall,
  InvalidSeifert,
  NonIntegerOrder,
  NotRealizable,
  DegenerateAngle,
  InconsistentClassification,
  CountMismatch,
  InjectivityViolation,
  VerificationFailed,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// Input errors are the user's fault; everything else is a broken invariant.
  bool is_input_error() const noexcept {
    return code_ == ErrorCode::NotPairwiseCoprime || code_ == ErrorCode::ValueTooSmall ||
           code_ == ErrorCode::InvalidSeifert;
  }

 private:
  ErrorCode code_;
};

}  // namespace brieskorn
