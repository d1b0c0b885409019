#include "metacover/error.hpp"

namespace metacover {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvalidContext: return "InvalidContext";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotInCongruenceSubgroup: return "NotInCongruenceSubgroup";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace metacover
