#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace drshadow {

enum class ErrorCode {
  kPointNotInSpace,
  kNotInDomain,
  kNotInImage,
  kInfiniteReturnTime,
  kZeroWordNotInDomain,
  kLengthBelowTwo,
  kUnsupportedSystem,
  kUndetectableInfinity,
  kMalformedSequence,
  kBallEscapesImage,
  kRhoTooLarge,
  kOrbitLeavesDomain,
  kNotInLimitSet,
  kNotPseudoOrbit,
  kParse,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

// Every library failure is reported through this one exception type; callers
// that need to branch on the failure inspect code().
class DynamicsError : public std::runtime_error {
 public:
  DynamicsError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace drshadow
