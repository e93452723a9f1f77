#pragma once

#include "bottkit/rootsys.hpp"

namespace bottkit {

// H^*(G/P, E_Lambda) for an irreducible homogeneous bundle: either zero in
// every degree, or concentrated in a single degree q with fiber the
// irreducible of highest weight I(Lambda).
struct CohomologyResult {
  enum class Kind { AllZero, Concentrated };
  Kind kind = Kind::AllZero;
  int degree = -1;             // valid iff Concentrated
  Weight highest_weight;       // valid iff Concentrated
  BigInt dimension = 0;        // 0 iff AllZero

  static CohomologyResult all_zero() { return {}; }
  bool operator==(const CohomologyResult&) const = default;
};

// Evaluates the Borel-Weil-Bott rule for weight lambda on G/P_sigma. lambda
// must be integral and sigma-dominant (fcoords >= 0 on sigma vertices, since
// the fiber representation of the Levi must exist); rank must match.
CohomologyResult bott_cohomology(const RootSystem& rs, const IndexSet& sigma,
                                 const Weight& lambda);

// Product formula dim = prod_{delta > 0} (Lambda + gamma, delta)/(gamma, delta)
// for dominant integral Lambda, evaluated exactly.
BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda);

struct LineBundleEntry {
  Weight weight;
  CohomologyResult result;
  bool operator==(const LineBundleEntry&) const = default;
};

// One-dimensional characters of P_sigma: fcoords zero on sigma. Sweeps the
// complement coordinates over [lo, hi]^(rank - |sigma|) in ascending
// lexicographic order (first complement vertex most significant).
std::vector<LineBundleEntry> line_bundle_table(const RootSystem& rs,
                                               const IndexSet& sigma,
                                               long long lo, long long hi);

}  // namespace bottkit
