#include "bottkit/vanishing.hpp"

#include <algorithm>
#include <sstream>

namespace bottkit {

namespace {

std::string render_root(const Root& r) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < r.coeffs.size(); ++i) {
    if (i) os << ' ';
    os << r.coeffs[i];
  }
  os << ']';
  return os.str();
}

bool coordinatewise_leq(const Root& a, const Root& b) {
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    if (a.coeffs[i] > b.coeffs[i]) return false;
  return true;
}

bool is_ab_root(const ABConfig& cfg, const Root& r) {
  bool has_a = false;
  for (int i = 0; i < static_cast<int>(r.coeffs.size()); ++i) {
    if (r.coeffs[i] == 0) continue;
    const bool in_a = index_set_contains(cfg.A, i);
    if (!in_a && !index_set_contains(cfg.B, i)) return false;
    has_a |= in_a;
  }
  return has_a;
}

}  // namespace

const char* fast_path_name(FastPath f) {
  switch (f) {
    case FastPath::None: return "none";
    case FastPath::Case1: return "case1";
    case FastPath::Case2: return "case2";
    case FastPath::Case3: return "case3";
  }
  return "none";
}

void validate_ab_config(const RootSystem& rs, const IndexSet& sigma,
                        const ABConfig& cfg) {
  for (int i : cfg.A) {
    if (i < 0 || i >= rs.rank())
      fail(ErrorCode::IndexOutOfRange, "A vertex " + std::to_string(i + 1));
    if (index_set_contains(sigma, i))
      fail(ErrorCode::ConditionABViolated,
           "A vertex " + std::to_string(i + 1) + " lies in sigma");
  }
  for (int i : cfg.B) {
    if (i < 0 || i >= rs.rank())
      fail(ErrorCode::IndexOutOfRange, "B vertex " + std::to_string(i + 1));
    if (!index_set_contains(sigma, i))
      fail(ErrorCode::ConditionABViolated,
           "B vertex " + std::to_string(i + 1) + " lies outside sigma");
  }
}

std::vector<Root> ab_roots(const RootSystem& rs, const IndexSet& sigma,
                           const ABConfig& cfg_in) {
  ABConfig cfg{normalized_index_set(cfg_in.A), normalized_index_set(cfg_in.B)};
  validate_ab_config(rs, sigma, cfg);
  std::vector<Root> out;
  for (const Root& r : rs.positive_roots())
    if (is_ab_root(cfg, r)) out.push_back(r);
  return out;
}

bool satisfies_significance(const RootSystem& rs, const ABConfig& cfg,
                            const Root& delta, const Root& sigma_delta) {
  if (!is_ab_root(cfg, delta) || !is_ab_root(cfg, sigma_delta)) return false;
  if (!coordinatewise_leq(sigma_delta, delta)) return false;

  Rat lhs(0), rhs(0);
  for (int i : cfg.A)
    lhs += Rat(sigma_delta.coeffs[i]) * 2 * rs.form().half_square(i);
  for (int i : cfg.B)
    rhs += Rat(sigma_delta.coeffs[i]) * 2 * rs.form().half_square(i);
  if (lhs < rhs) return false;

  const Rat sigma_sq = rs.inner(sigma_delta, sigma_delta);
  std::optional<Rat> common;
  for (int i = 0; i < rs.rank(); ++i) {
    if (delta.coeffs[i] == sigma_delta.coeffs[i]) continue;
    const Rat sq = 2 * rs.form().half_square(i);
    if (common && *common != sq) return false;
    if (sq > sigma_sq) return false;
    common = sq;
  }
  return true;
}

std::optional<SignificanceWitness> significance(const RootSystem& rs,
                                                const ABConfig& cfg_in,
                                                const Root& delta) {
  ABConfig cfg{normalized_index_set(cfg_in.A), normalized_index_set(cfg_in.B)};
  for (int i : cfg.A)
    if (index_set_contains(cfg.B, i))
      fail(ErrorCode::ConditionABViolated,
           "A and B overlap at vertex " + std::to_string(i + 1));
  if (static_cast<int>(delta.coeffs.size()) != rs.rank())
    fail(ErrorCode::DimensionMismatch, "root length does not match rank");
  if (!delta.is_positive() || !rs.is_positive_root(delta.coeffs) ||
      !is_ab_root(cfg, delta))
    fail(ErrorCode::NotABRoot, "delta " + render_root(delta) + " is not an (A,B)-root");

  const IndexSet support = delta.support();
  IndexSet support_a;
  for (int i : support)
    if (index_set_contains(cfg.A, i)) support_a.push_back(i);

  auto simple_root = [&](int i) {
    std::vector<int> c(rs.rank(), 0);
    c[i] = 1;
    return Root{c};
  };
  auto confirmed = [&](Root sigma_delta, FastPath path) {
    if (!satisfies_significance(rs, cfg, delta, sigma_delta))
      fail(ErrorCode::InternalError,
           "fast path produced an invalid witness for " + render_root(delta));
    return SignificanceWitness{delta, std::move(sigma_delta), path};
  };

  // Case 1: all of C(delta) has one length; any alpha in C(delta) n A works,
  // take the lowest index.
  bool uniform = true;
  for (int i : support)
    uniform &= (rs.form().half_square(i) == rs.form().half_square(support[0]));
  if (uniform && !support_a.empty())
    return confirmed(simple_root(support_a[0]), FastPath::Case1);

  // Case 2: a strictly longest root alpha0 in C(delta) lying in A, entering
  // delta with coefficient 1 (so C(delta - alpha0) keeps only the short
  // class). Without the coefficient guard the remainder can stay mixed.
  {
    int longest = -1;
    bool strict = true;
    for (int i : support) {
      if (longest < 0 ||
          rs.form().half_square(i) > rs.form().half_square(longest)) {
        longest = i;
        strict = true;
      } else if (rs.form().half_square(i) == rs.form().half_square(longest)) {
        strict = false;
      }
    }
    if (strict && index_set_contains(support_a, longest) &&
        delta.coeffs[longest] == 1)
      return confirmed(simple_root(longest), FastPath::Case2);
  }

  // Case 3: a strictly shortest alpha0 in C(delta) lying in A whose
  // coefficient equals -<beta, alpha0-check> for some positive root beta;
  // then the reflected root beta + c_alpha0(delta) alpha0 is a candidate.
  {
    int shortest = -1;
    bool strict = true;
    for (int i : support) {
      if (shortest < 0 ||
          rs.form().half_square(i) < rs.form().half_square(shortest)) {
        shortest = i;
        strict = true;
      } else if (rs.form().half_square(i) == rs.form().half_square(shortest)) {
        strict = false;
      }
    }
    if (strict && index_set_contains(support_a, shortest)) {
      const int c0 = delta.coeffs[shortest];
      for (const Root& beta : rs.positive_roots()) {
        // <beta, alpha0-check> = (beta, alpha0)/d_alpha0
        const Rat pairing =
            rs.inner(beta, simple_root(shortest)) / rs.form().half_square(shortest);
        if (pairing != -c0) continue;
        std::vector<int> c = beta.coeffs;
        c[shortest] += c0;
        Root candidate{c};
        if (!candidate.is_positive() || !rs.is_positive_root(c)) continue;
        if (!satisfies_significance(rs, cfg, delta, candidate)) continue;
        return SignificanceWitness{delta, std::move(candidate), FastPath::Case3};
      }
    }
  }

  // Exhaustive: every (A,B)-root sigma <= delta in (height, lex) order.
  for (const Root& sigma_delta : rs.positive_roots()) {
    if (!coordinatewise_leq(sigma_delta, delta)) continue;
    if (!is_ab_root(cfg, sigma_delta)) continue;
    if (satisfies_significance(rs, cfg, delta, sigma_delta))
      return SignificanceWitness{delta, sigma_delta, FastPath::None};
  }
  return std::nullopt;
}

EllResult ell_AB(const RootSystem& rs, const IndexSet& sigma,
                 const ABConfig& cfg) {
  EllResult res;
  for (const Root& delta : ab_roots(rs, sigma, cfg)) {
    if (auto w = significance(rs, cfg, delta)) {
      res.witnesses.push_back(std::move(*w));
      ++res.count;
    }
  }
  return res;
}

std::int64_t ell_simply_laced(const RootSystem& rs, const IndexSet& sigma,
                              const ABConfig& cfg_in) {
  ABConfig cfg{normalized_index_set(cfg_in.A), normalized_index_set(cfg_in.B)};
  validate_ab_config(rs, sigma, cfg);

  // Prune B to B': keep only components of A u B meeting A.
  IndexSet ab = cfg.A;
  ab.insert(ab.end(), cfg.B.begin(), cfg.B.end());
  ab = normalized_index_set(std::move(ab));
  IndexSet kept;
  for (const IndexSet& comp : connected_components(rs.diagram(), ab)) {
    const bool meets_a = std::any_of(comp.begin(), comp.end(), [&](int v) {
      return index_set_contains(cfg.A, v);
    });
    if (meets_a) kept.insert(kept.end(), comp.begin(), comp.end());
  }
  kept = normalized_index_set(std::move(kept));
  IndexSet b_pruned;
  for (int v : cfg.B)
    if (index_set_contains(kept, v)) b_pruned.push_back(v);

  for (int i : kept)
    for (int j : kept)
      if (i < j && rs.diagram().adjacent(i, j) && rs.diagram().bond(i, j) > 1)
        fail(ErrorCode::NotSimplyLacedConfig,
             "multiple edge between vertices " + std::to_string(i + 1) +
                 " and " + std::to_string(j + 1));

  auto count_supported = [&](const IndexSet& verts) {
    std::int64_t n = 0;
    for (const Root& r : rs.positive_roots()) {
      bool inside = true;
      for (int i : r.support())
        inside &= index_set_contains(verts, i);
      n += inside;
    }
    return n;
  };
  return count_supported(kept) - count_supported(b_pruned);
}

EllResult theorem_main_range(const RootSystem& rs, const IndexSet& sigma_in,
                             const Weight& lambda, const ABConfig& cfg) {
  const IndexSet sigma = normalized_index_set(sigma_in);
  validate_ab_config(rs, sigma, cfg);
  if (static_cast<int>(lambda.fcoords.size()) != rs.rank())
    fail(ErrorCode::DimensionMismatch, "weight length does not match rank");
  if (!lambda.is_integral())
    fail(ErrorCode::NonIntegralWeight, "weight must have integer fcoords");
  for (int i : sigma)
    if (lambda.fcoords[i] < 0)
      fail(ErrorCode::NotSigmaDominant,
           "fcoord " + std::to_string(i + 1) + " is negative on sigma");
  for (int i : cfg.A)
    if (lambda.fcoords[i] >= 0)
      fail(ErrorCode::ConditionABViolated,
           "fcoord " + std::to_string(i + 1) + " must be negative on A");
  for (int i : cfg.B)
    if (lambda.fcoords[i] != 0)
      fail(ErrorCode::ConditionABViolated,
           "fcoord " + std::to_string(i + 1) + " must vanish on B");
  return ell_AB(rs, sigma, cfg);
}

SemisimpleResult semisimple_vanishing(const RootSystem& rs,
                                      const IndexSet& sigma_in,
                                      const std::vector<Weight>& weights) {
  const IndexSet sigma = normalized_index_set(sigma_in);
  for (int i : sigma)
    if (i < 0 || i >= rs.rank())
      fail(ErrorCode::IndexOutOfRange, "sigma vertex " + std::to_string(i + 1));
  if (weights.empty())
    fail(ErrorCode::InvalidArgument, "need at least one highest weight");
  for (const Weight& w : weights) {
    if (static_cast<int>(w.fcoords.size()) != rs.rank())
      fail(ErrorCode::DimensionMismatch, "weight length does not match rank");
    if (!w.is_integral())
      fail(ErrorCode::NonIntegralWeight, "weight must have integer fcoords");
    for (int i : sigma)
      if (w.fcoords[i] < 0)
        fail(ErrorCode::NotSigmaDominant,
             "fcoord " + std::to_string(i + 1) + " is negative on sigma");
  }

  SemisimpleResult res;
  // B: the sigma components on which the whole fiber acts trivially.
  for (const IndexSet& comp : connected_components(rs.diagram(), sigma)) {
    const bool all_vanish =
        std::all_of(weights.begin(), weights.end(), [&](const Weight& w) {
          return std::all_of(comp.begin(), comp.end(), [&](int i) {
            return w.fcoords[i] == 0;
          });
        });
    if (all_vanish) res.B.insert(res.B.end(), comp.begin(), comp.end());
  }
  res.B = normalized_index_set(std::move(res.B));

  bool first = true;
  for (const Weight& w : weights) {
    IndexSet a;
    for (int i = 0; i < rs.rank(); ++i)
      if (!index_set_contains(sigma, i) && w.fcoords[i] < 0) a.push_back(i);
    if (a.empty()) continue;  // dominant summand: positive cohomology vanishes
    const std::int64_t ell = ell_AB(rs, sigma, ABConfig{a, res.B}).count;
    res.constrained.push_back({w, a, ell});
    if (first || ell < res.q_max) res.q_max = ell;
    first = false;
  }
  res.unbounded = res.constrained.empty();
  if (res.unbounded) res.q_max = 0;
  return res;
}

H1Range theorem_H1_range(const RootSystem& rs, const ParabolicData& pd,
                         std::int64_t generating_dim) {
  if (generating_dim < 1)
    fail(ErrorCode::InvalidArgument, "generating dimension must be positive");
  H1Range r;
  r.d_P = d_P(rs, pd);
  r.ell_P = ell_P(rs, pd);
  r.guarantee = generating_dim < r.d_P;
  return r;
}

bool rigidity_check(const RootSystem& rs, const ParabolicData& pd,
                    std::int64_t generating_dim) {
  if (generating_dim < 1)
    fail(ErrorCode::InvalidArgument, "generating dimension must be positive");
  const std::int64_t d = d_P(rs, pd);
  return generating_dim < d && d > 1;
}

}  // namespace bottkit
