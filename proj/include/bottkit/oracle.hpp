#pragma once

#include <cstdint>
#include <string>

#include "bottkit/vanishing.hpp"

namespace bottkit::oracle {

// Positive roots as the Weyl orbit of the simple roots intersected with the
// positive cone. Independent of the closure generator: shares only the
// Cartan matrix.
std::vector<Root> roots_by_reflections(const DynkinDiagram& d);

// Minimum Weyl dimension over nonzero dominant weights with fcoords <= cap.
// cap >= 2 certifies the global minimum (the dimension is strictly monotone
// in every coordinate). Own root list, own product loop.
struct MinDimResult {
  BigInt dimension;
  Weight witness;
  bool operator==(const MinDimResult&) const = default;
};

MinDimResult min_dim_scan(const SimpleTypeId& t, int cap);

// Brute-force check of the index bound: every integral weight in the box
// satisfying the sign condition (fcoords < 0 on A, = 0 on B) with regular
// shifted weight must have index(weight + gamma) >= ell_AB, and every
// significant root must pair strictly negatively with weight + gamma.
struct SweepSpec {
  IndexSet sigma;
  ABConfig cfg;
  std::vector<std::pair<long long, long long>> bounds;  // per fcoord, inclusive
  std::uint64_t seed = 0;
  std::uint64_t sample_cap = 1u << 20;  // exhaustive iff box total <= this
  int threads = 1;

  // Criterion box: A coordinates [lo, -2] (condition (AB) plus regularity of
  // the shifted weight force <= -2 anyway), B pinned to 0, others [lo, hi].
  static SweepSpec standard(const RootSystem& rs, IndexSet sigma, ABConfig cfg,
                            long long lo, long long hi);
};

struct SweepViolation {
  std::vector<long long> fcoords;
  std::string kind;            // "index_below_bound" | "significant_pairing"
  std::vector<int> delta;      // offending root for pairing violations
  bool operator==(const SweepViolation&) const = default;
};

struct SweepReport {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t box_total = 0;
  std::uint64_t checked = 0;   // weights satisfying the sign condition
  std::uint64_t regular = 0;
  std::uint64_t singular = 0;
  std::int64_t bound = 0;      // ell_AB
  std::vector<SweepViolation> violations;
  std::int64_t runtime_ms = 0;
  bool operator==(const SweepReport& o) const {
    return exhaustive == o.exhaustive && seed == o.seed &&
           box_total == o.box_total && checked == o.checked &&
           regular == o.regular && singular == o.singular && bound == o.bound &&
           violations == o.violations;  // runtime intentionally ignored
  }
};

SweepReport index_bound_sweep(const RootSystem& rs, const SweepSpec& spec);

// Throws OracleViolation describing the first violation, if any.
void require_clean(const SweepReport& report);

}  // namespace bottkit::oracle
