#pragma once

#include <cstdint>
#include <optional>

#include "bottkit/parabolic.hpp"
#include "bottkit/rootsys.hpp"

namespace bottkit {

// A in Pi \ sigma, B in sigma. A positive root delta is an (A,B)-root when
// C(delta) lies in A u B and some A-coordinate is positive.
struct ABConfig {
  IndexSet A;
  IndexSet B;
  bool operator==(const ABConfig&) const = default;
};

void validate_ab_config(const RootSystem& rs, const IndexSet& sigma,
                        const ABConfig& cfg);

std::vector<Root> ab_roots(const RootSystem& rs, const IndexSet& sigma,
                           const ABConfig& cfg);

enum class FastPath { None, Case1, Case2, Case3 };
const char* fast_path_name(FastPath f);

struct SignificanceWitness {
  Root delta;
  Root sigma_delta;
  FastPath fastpath = FastPath::None;
  bool operator==(const SignificanceWitness&) const = default;
};

// Full definition: sigma <= delta coordinatewise, both (A,B)-roots,
// sum_A c_alpha(sigma)(alpha,alpha) >= sum_B c_beta(sigma)(beta,beta), and
// every simple root in C(delta - sigma) has one common squared length
// <= (sigma, sigma). Vacuous when delta = sigma.
bool satisfies_significance(const RootSystem& rs, const ABConfig& cfg,
                            const Root& delta, const Root& sigma_delta);

// Tries the three sufficient fast paths, then exhaustive witness search in
// (height, lex) order. nullopt = not significant.
std::optional<SignificanceWitness> significance(const RootSystem& rs,
                                                const ABConfig& cfg,
                                                const Root& delta);

struct EllResult {
  std::int64_t count = 0;                      // number of significant roots
  std::vector<SignificanceWitness> witnesses;  // one per significant root
  bool operator==(const EllResult&) const = default;
};

EllResult ell_AB(const RootSystem& rs, const IndexSet& sigma,
                 const ABConfig& cfg);

// Counting formula valid when, after dropping the components of A u B that
// miss A, no multiple edge remains: |positive roots supported in A u B'| -
// |positive roots supported in B'|.
std::int64_t ell_simply_laced(const RootSystem& rs, const IndexSet& sigma,
                              const ABConfig& cfg);

// H^q = 0 for 0 <= q < q_max for any bundle weight satisfying the sign
// condition: fcoords < 0 on A, = 0 on B. Returns ell_AB with certificate.
EllResult theorem_main_range(const RootSystem& rs, const IndexSet& sigma,
                             const Weight& lambda, const ABConfig& cfg);

// Vanishing bound for a completely reducible fiber given the list of
// irreducible highest weights: B = components of sigma on which every weight
// vanishes; per weight, A = complement vertices with negative fcoord.
// Unbounded (H^q = 0 for all q > 0) when every weight is dominant.
struct SemisimpleResult {
  bool unbounded = false;
  std::int64_t q_max = 0;   // valid iff !unbounded; guarantee is 0 < q < q_max
  IndexSet B;
  struct Entry {
    Weight weight;
    IndexSet A;
    std::int64_t ell = 0;
    bool operator==(const Entry&) const = default;
  };
  std::vector<Entry> constrained;  // weights with nonempty A only
  bool operator==(const SemisimpleResult&) const = default;
};

SemisimpleResult semisimple_vanishing(const RootSystem& rs, const IndexSet& sigma,
                                      const std::vector<Weight>& weights);

// H^q(M, E) = 0 for 0 < q < ell(P) whenever the fiber representation is
// built by natural operations from one of dimension < d(P).
struct H1Range {
  bool guarantee = false;
  std::int64_t d_P = 0;
  std::int64_t ell_P = 0;  // the open range is (0, ell_P) when guarantee
  bool operator==(const H1Range&) const = default;
};

H1Range theorem_H1_range(const RootSystem& rs, const ParabolicData& pd,
                         std::int64_t generating_dim);

// Rigid iff generating_dim < d(P) and d(P) > 1 (then ell(P) >= 2, so
// H^1(End E) = 0).
bool rigidity_check(const RootSystem& rs, const ParabolicData& pd,
                    std::int64_t generating_dim);

}  // namespace bottkit
