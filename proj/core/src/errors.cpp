#include "drshadow/errors.hpp"

namespace drshadow {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kPointNotInSpace: return "point-not-in-space";
    case ErrorCode::kNotInDomain: return "not-in-domain";
    case ErrorCode::kNotInImage: return "not-in-image";
    case ErrorCode::kInfiniteReturnTime: return "infinite-return-time";
    case ErrorCode::kZeroWordNotInDomain: return "zero-word-not-in-domain";
    case ErrorCode::kLengthBelowTwo: return "length-below-two";
    case ErrorCode::kUnsupportedSystem: return "unsupported-system";
    case ErrorCode::kUndetectableInfinity: return "undetectable-infinity";
    case ErrorCode::kMalformedSequence: return "malformed-sequence";
    case ErrorCode::kBallEscapesImage: return "ball-escapes-image";
    case ErrorCode::kRhoTooLarge: return "rho-too-large";
    case ErrorCode::kOrbitLeavesDomain: return "orbit-leaves-domain";
    case ErrorCode::kNotInLimitSet: return "not-in-limit-set";
    case ErrorCode::kNotPseudoOrbit: return "not-a-pseudo-orbit";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

}  // namespace drshadow
