#include "bottkit/types.hpp"

#include <algorithm>

namespace bottkit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidType: return "InvalidType";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularWeight: return "SingularWeight";
    case ErrorCode::SingularShiftedWeight: return "SingularShiftedWeight";
    case ErrorCode::NonIntegralWeight: return "NonIntegralWeight";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::NotSigmaDominant: return "NotSigmaDominant";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::AlphaInSigma: return "AlphaInSigma";
    case ErrorCode::SigmaIsFull: return "SigmaIsFull";
    case ErrorCode::NotABRoot: return "NotABRoot";
    case ErrorCode::ConditionABViolated: return "ConditionABViolated";
    case ErrorCode::NotSimplyLacedConfig: return "NotSimplyLacedConfig";
    case ErrorCode::OracleViolation: return "OracleViolation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "UnknownError";
}

IndexSet normalized_index_set(IndexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool index_set_contains(const IndexSet& s, int i) {
  return std::binary_search(s.begin(), s.end(), i);
}

}  // namespace bottkit
