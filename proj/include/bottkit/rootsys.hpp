#pragma once

#include <optional>
#include <utility>

#include "bottkit/types.hpp"

namespace bottkit {

// One simple factor of a semisimple type, e.g. {'B', 3}.
struct SimpleTypeId {
  char letter = 'A';
  int rank = 0;
  bool operator==(const SimpleTypeId&) const = default;
};

std::string to_string(const SimpleTypeId& t);

// Rank bounds that make each family name unambiguous (Bourbaki):
// A>=1, B>=2, C>=2, D>=4, E in {6,7,8}, F=4, G=2.
bool is_valid_simple_type(char letter, int rank);

// Semisimple Dynkin diagram: ordered product of simple factors, vertices
// numbered 0..rank-1 across factors in order, Bourbaki numbering inside each.
class DynkinDiagram {
public:
  // Builds from an already validated factor list.
  static DynkinDiagram build(const std::vector<SimpleTypeId>& factors);
  // Parses "A4", "B3xG2", "A1xA1xD5" (case-insensitive letters, 'x' or 'X').
  static DynkinDiagram parse(const std::string& spec);

  int rank() const { return rank_; }
  const std::vector<SimpleTypeId>& factors() const { return factors_; }
  // Canonical spelling, e.g. "A4xB2".
  const std::string& type_string() const { return type_string_; }

  // Cartan matrix, convention a[i][j] = 2(alpha_i, alpha_j)/(alpha_i, alpha_i),
  // so the fundamental coordinates of a root beta are cartan() * coeffs(beta).
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  // Factor id (0-based position in factors()) containing vertex i.
  int factor_of(int i) const { return factor_of_.at(i); }
  // Ambient index of the first vertex of factor f.
  int factor_offset(int f) const { return factor_offset_.at(f); }

  bool adjacent(int i, int j) const { return i != j && cartan_[i][j] != 0; }
  // Bond multiplicity a_ij * a_ji: 1 single, 2 double, 3 triple edge.
  int bond(int i, int j) const { return cartan_[i][j] * cartan_[j][i]; }

  // Half squared lengths d_i = (alpha_i, alpha_i)/2, long roots normalized to
  // d = 1 in every factor.
  const std::vector<Rat>& half_square() const { return half_square_; }

private:
  int rank_ = 0;
  std::vector<SimpleTypeId> factors_;
  std::string type_string_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> factor_of_;
  std::vector<int> factor_offset_;
  std::vector<Rat> half_square_;
};

// Symmetric invariant form on the weight lattice, represented by its gram
// matrix on the simple roots: g[i][j] = (alpha_i, alpha_j).
class BilinearForm {
public:
  static BilinearForm standard(const DynkinDiagram& d);
  // Same form with one factor's component multiplied by factor > 0.
  BilinearForm rescaled(const DynkinDiagram& d, int factor_id,
                        const Rat& scale) const;

  const Rat& gram(int i, int j) const { return gram_[i][j]; }
  // d_i = (alpha_i, alpha_i)/2 under this form.
  Rat half_square(int i) const { return gram_[i][i] / 2; }
  int rank() const { return static_cast<int>(gram_.size()); }

private:
  std::vector<std::vector<Rat>> gram_;
};

// Root, stored by integer coordinates in the simple-root basis.
struct Root {
  std::vector<int> coeffs;

  int height() const;
  bool is_positive() const;  // nonzero, all coords >= 0
  IndexSet support() const;  // vertices with nonzero coordinate
  bool operator==(const Root&) const = default;
};

// (height, then lex on coeffs) total order used wherever "lowest root first"
// determinism is needed.
bool root_order_less(const Root& a, const Root& b);

// Weight in fundamental coordinates f_i = 2(lambda, alpha_i)/(alpha_i, alpha_i).
struct Weight {
  std::vector<Rat> fcoords;

  bool is_integral() const;
  bool is_dominant() const;  // all fcoords >= 0
  bool operator==(const Weight&) const = default;
};

Weight weight_from_ints(const std::vector<long long>& v);
Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);

// A diagram, a form, and the positive roots (generated by integer-only
// closure from the simple roots).
class RootSystem {
public:
  static RootSystem build(const DynkinDiagram& d);
  static RootSystem build(const DynkinDiagram& d, const BilinearForm& form);

  const DynkinDiagram& diagram() const { return diagram_; }
  const BilinearForm& form() const { return form_; }
  int rank() const { return diagram_.rank(); }

  // Sorted by root_order_less.
  const std::vector<Root>& positive_roots() const { return positive_; }
  bool is_positive_root(const std::vector<int>& coeffs) const;
  // Throws NotARoot unless +coeffs or -coeffs is a positive root.
  Root checked_root(const std::vector<int>& coeffs) const;

  // Invariant form.
  Rat inner(const Weight& a, const Weight& b) const;
  Rat inner(const Weight& a, const Root& r) const;
  Rat inner(const Root& a, const Root& b) const;
  Rat square(const Root& r) const { return inner(r, r); }

  // Fundamental coordinates of a root: cartan * coeffs.
  std::vector<Rat> fundamental_coords(const Root& r) const;
  // Root-basis coordinates of a weight: cartan^{-1} * fcoords.
  std::vector<Rat> root_coords(const Weight& w) const;

  // gamma = sum of fundamental weights = half sum of positive roots.
  Weight gamma() const;

  // First positive root orthogonal to lambda, in root_order_less order.
  std::optional<Root> singular_witness(const Weight& lambda) const;
  bool is_singular(const Weight& lambda) const;

  // #{delta in Delta+ : (lambda, delta) < 0}. Throws SingularWeight on
  // singular input.
  int index(const Weight& lambda) const;

  // s_i in fundamental coordinates.
  Weight apply_simple_reflection(int i, const Weight& w) const;

  // Repeatedly reflects at the lowest-index negative coordinate. Returns the
  // dominant representative and the number of reflections used (= index for
  // regular input). Throws SingularWeight if some orbit point hits a wall.
  std::pair<Weight, int> dominantize(const Weight& lambda) const;

  // I(Lambda) = dominantize(Lambda + gamma) - gamma. Requires Lambda + gamma
  // regular (throws SingularShiftedWeight). Dominant: the shifted dominant
  // representative has strictly positive coordinates.
  Weight I_of(const Weight& lambda) const;

  // Saturated chain lower = beta_0 < beta_1 < ... < beta_k = upper where each
  // step adds one positive root and every beta_t is a root. Requires
  // upper - lower to have all coords >= 0 (else NotComparable) and both
  // endpoints to be roots.
  std::vector<Root> find_root_chain(const Root& lower, const Root& upper) const;

private:
  DynkinDiagram diagram_;
  BilinearForm form_;
  std::vector<Root> positive_;
  std::vector<std::vector<Rat>> cartan_inverse_;

  void check_rank(const Weight& w) const;
  int root_lookup(const std::vector<int>& coeffs) const;  // -1 if absent
};

// Positive roots of a diagram by integer closure; free function so callers
// without a form (the reflection oracle's counterpart) can reuse it.
std::vector<Root> positive_roots_by_closure(const DynkinDiagram& d);

// Connected components of the subgraph induced on `vertices`, each sorted
// ascending; components ordered by smallest vertex.
std::vector<IndexSet> connected_components(const DynkinDiagram& d,
                                           const IndexSet& vertices);

}  // namespace bottkit
