#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace bottkit {

// Exact arithmetic everywhere. Counts that are provably small stay int64,
// representation dimensions and Weyl-formula numerators are BigInt, inner
// products and weight coordinates are Rat.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class ErrorCode {
  InvalidType,          // unknown letter or rank out of range for the family
  ParseError,           // malformed type string / weight / index set
  IndexOutOfRange,      // simple-root index outside 1..rank
  DimensionMismatch,    // weight length != rank
  SingularWeight,       // operation requires a regular weight
  SingularShiftedWeight,// Lambda + gamma singular where regular required
  NonIntegralWeight,    // operation requires integral coordinates
  NotDominant,          // operation requires a dominant weight
  NotSigmaDominant,     // fcoord < 0 on a Sigma vertex
  NotComparable,        // root pair is not <= in the root order
  NotARoot,             // coordinate vector is not a root
  AlphaInSigma,         // complement-indexed operation got a Sigma vertex
  SigmaIsFull,          // parabolic invariants undefined for Sigma = whole diagram
  NotABRoot,            // root outside the (A,B) family
  ConditionABViolated,  // A/B not disjoint, A empty where required, or B not in Sigma
  NotSimplyLacedConfig, // simply-laced count requested on a multiple edge
  OracleViolation,      // independent recomputation disagreed
  InvalidArgument,      // other domain violation (bad scale factor, bad bounds...)
  InternalError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

// Sorted, duplicate-free, 0-based vertex indices.
using IndexSet = std::vector<int>;

IndexSet normalized_index_set(IndexSet s);
bool index_set_contains(const IndexSet& s, int i);

}  // namespace bottkit
