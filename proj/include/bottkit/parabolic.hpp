#pragma once

#include <cstdint>

#include "bottkit/rootsys.hpp"

namespace bottkit {

struct LeviComponent {
  IndexSet vertices;    // ambient vertex indices, ascending
  SimpleTypeId type;    // abstract isomorphism type of the subdiagram
  bool operator==(const LeviComponent&) const = default;
};

// Everything the parabolic P_sigma determines combinatorially: the Levi
// components of sigma, which of them touch each complement vertex, and the
// root split Delta(P) = [sigma] u (Delta_-  \ [sigma]).
struct ParabolicData {
  IndexSet sigma;
  IndexSet complement;                    // Pi \ sigma, ascending
  std::vector<LeviComponent> components;
  std::vector<IndexSet> adjacency;        // per complement vertex: component ids
  std::vector<Root> levi_roots;           // +-roots supported inside sigma
  std::vector<Root> nilradical_roots;     // negative roots outside [sigma]
};

ParabolicData analyze_parabolic(const RootSystem& rs, const IndexSet& sigma);

// Isomorphism type of a connected induced subdiagram. Rank-2 double edges
// canonicalize to B2; 3-vertex chains to A3.
SimpleTypeId classify_subdiagram(const DynkinDiagram& d, const IndexSet& vertices);

// Minimal dimension of a nontrivial irreducible representation, derived by
// the independent scan oracle and cached per type.
std::int64_t min_nontrivial_dim(const SimpleTypeId& t);

// d(alpha): sum of min_nontrivial_dim over the components adjacent to alpha;
// 1 when none. ell(alpha): min over adjacent components C of ell({alpha}, C);
// 1 when none. alpha is an ambient vertex outside sigma.
std::int64_t d_alpha(const RootSystem& rs, const ParabolicData& pd, int alpha);
std::int64_t ell_alpha(const RootSystem& rs, const ParabolicData& pd, int alpha);

// Minima over the complement; undefined (SigmaIsFull) when sigma = Pi.
std::int64_t d_P(const RootSystem& rs, const ParabolicData& pd);
std::int64_t ell_P(const RootSystem& rs, const ParabolicData& pd);

// True iff repdim < sum(dims): any representation of that dimension must be
// trivial on at least one of the simple ideals.
bool triviality_guarantee(const std::vector<std::int64_t>& dims,
                          std::int64_t repdim);

// Row-per-complement-vertex summary used by reporting front ends.
struct ParabolicReport {
  struct ComponentInfo {
    IndexSet vertices;
    SimpleTypeId type;
    std::int64_t min_dim = 0;
    bool operator==(const ComponentInfo&) const = default;
  };
  struct Row {
    int alpha = 0;
    std::int64_t d = 0;
    std::int64_t ell = 0;
    std::vector<ComponentInfo> adjacent;
    bool operator==(const Row&) const = default;
  };
  std::vector<Row> rows;
  std::int64_t d_P = 0;
  std::int64_t ell_P = 0;
  bool operator==(const ParabolicReport&) const = default;
};

ParabolicReport make_parabolic_report(const RootSystem& rs,
                                      const ParabolicData& pd);

}  // namespace bottkit
