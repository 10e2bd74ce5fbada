#include "spechtvar/error.hpp"

namespace spechtvar {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NonUniqueA: return "NonUniqueA";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::RankCheckFailed: return "RankCheckFailed";
    case ErrorCode::ZeroPoint: return "ZeroPoint";
    case ErrorCode::CertificationFailed: return "CertificationFailed";
    case ErrorCode::TooManyPoints: return "TooManyPoints";
    case ErrorCode::InconsistentCounts: return "InconsistentCounts";
    case ErrorCode::NotBlockMultiple: return "NotBlockMultiple";
    case ErrorCode::InvariantViolated: return "InvariantViolated";
    case ErrorCode::Usage: return "Usage";
  }
  return "Unknown";
}

}  // namespace spechtvar
