#include "bottkit/parabolic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "bottkit/oracle.hpp"
#include "bottkit/vanishing.hpp"

namespace bottkit {

SimpleTypeId classify_subdiagram(const DynkinDiagram& d, const IndexSet& verts_in) {
  const IndexSet verts = normalized_index_set(verts_in);
  if (verts.empty())
    fail(ErrorCode::InvalidArgument, "cannot classify an empty subdiagram");
  if (connected_components(d, verts).size() != 1)
    fail(ErrorCode::InvalidArgument, "subdiagram is not connected");
  const int n = static_cast<int>(verts.size());
  if (n == 1) return {'A', 1};

  int max_bond = 1;
  std::vector<int> degree(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!d.adjacent(verts[i], verts[j])) continue;
      ++degree[i];
      ++degree[j];
      max_bond = std::max(max_bond, d.bond(verts[i], verts[j]));
    }
  }
  const bool is_chain = *std::max_element(degree.begin(), degree.end()) <= 2;

  if (max_bond == 3) return {'G', 2};
  if (max_bond == 2) {
    // B/C/F territory; relative lengths inside the subdiagram decide.
    if (!is_chain)
      fail(ErrorCode::InternalError, "double edge in a branched subdiagram");
    if (n == 2) return {'B', 2};  // B2 = C2, canonical letter B
    Rat longest = d.half_square()[verts[0]];
    for (int v : verts) longest = std::max(longest, d.half_square()[v]);
    int shorts = 0;
    for (int v : verts)
      if (d.half_square()[v] < longest) ++shorts;
    if (shorts == 1) return {'B', n};
    if (shorts == n - 1) return {'C', n};
    if (shorts == 2 && n == 4) return {'F', 4};
    fail(ErrorCode::InternalError, "unrecognized multiply-laced subdiagram");
  }

  if (is_chain) return {'A', n};
  // One branch vertex; arm lengths identify D/E.
  int center = -1;
  for (int i = 0; i < n; ++i) {
    if (degree[i] > 3)
      fail(ErrorCode::InternalError, "vertex of degree > 3 in subdiagram");
    if (degree[i] == 3) {
      if (center >= 0)
        fail(ErrorCode::InternalError, "two branch vertices in subdiagram");
      center = i;
    }
  }
  std::vector<int> arms;
  for (int k = 0; k < n; ++k) {
    if (k == center || !d.adjacent(verts[k], verts[center])) continue;
    int len = 1, prev = center, cur = k;
    while (true) {
      int next = -1;
      for (int t = 0; t < n; ++t) {
        if (t != prev && t != cur && d.adjacent(verts[t], verts[cur])) {
          next = t;
          break;
        }
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3 || arms[0] != 1)
    fail(ErrorCode::InternalError, "unrecognized branched subdiagram");
  if (arms[1] == 1) return {'D', n};
  if (arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {'E', n};
  fail(ErrorCode::InternalError, "unrecognized branched subdiagram");
}

ParabolicData analyze_parabolic(const RootSystem& rs, const IndexSet& sigma_in) {
  const IndexSet sigma = normalized_index_set(sigma_in);
  for (int i : sigma)
    if (i < 0 || i >= rs.rank())
      fail(ErrorCode::IndexOutOfRange,
           "sigma vertex " + std::to_string(i + 1) + " out of range");

  ParabolicData pd;
  pd.sigma = sigma;
  for (int i = 0; i < rs.rank(); ++i)
    if (!index_set_contains(sigma, i)) pd.complement.push_back(i);

  for (const IndexSet& comp : connected_components(rs.diagram(), sigma))
    pd.components.push_back({comp, classify_subdiagram(rs.diagram(), comp)});

  for (int alpha : pd.complement) {
    IndexSet touching;
    for (int c = 0; c < static_cast<int>(pd.components.size()); ++c) {
      const bool adj = std::any_of(
          pd.components[c].vertices.begin(), pd.components[c].vertices.end(),
          [&](int v) { return rs.diagram().adjacent(alpha, v); });
      if (adj) touching.push_back(c);
    }
    pd.adjacency.push_back(touching);
  }

  for (const Root& r : rs.positive_roots()) {
    const IndexSet supp = r.support();
    const bool in_levi = std::all_of(supp.begin(), supp.end(), [&](int v) {
      return index_set_contains(sigma, v);
    });
    if (in_levi) {
      pd.levi_roots.push_back(r);
      std::vector<int> neg(r.coeffs.size());
      for (size_t k = 0; k < r.coeffs.size(); ++k) neg[k] = -r.coeffs[k];
      pd.levi_roots.push_back(Root{neg});
    } else {
      std::vector<int> neg(r.coeffs.size());
      for (size_t k = 0; k < r.coeffs.size(); ++k) neg[k] = -r.coeffs[k];
      pd.nilradical_roots.push_back(Root{neg});
    }
  }
  return pd;
}

std::int64_t min_nontrivial_dim(const SimpleTypeId& t) {
  if (!is_valid_simple_type(t.letter, t.rank))
    fail(ErrorCode::InvalidType, "invalid simple type " + to_string(t));
  static std::mutex mu;
  static std::map<std::pair<char, int>, std::int64_t> cache;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(t.letter, t.rank);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const BigInt dim = oracle::min_dim_scan(t, 2).dimension;
  const std::int64_t v = dim.convert_to<std::int64_t>();
  cache.emplace(key, v);
  return v;
}

namespace {

void check_alpha(const ParabolicData& pd, int alpha) {
  if (index_set_contains(pd.sigma, alpha))
    fail(ErrorCode::AlphaInSigma,
         "vertex " + std::to_string(alpha + 1) + " lies in sigma");
  if (!index_set_contains(pd.complement, alpha))
    fail(ErrorCode::IndexOutOfRange,
         "vertex " + std::to_string(alpha + 1) + " out of range");
}

const IndexSet& adjacency_row(const ParabolicData& pd, int alpha) {
  const auto pos = std::lower_bound(pd.complement.begin(), pd.complement.end(),
                                    alpha) - pd.complement.begin();
  return pd.adjacency[pos];
}

}  // namespace

std::int64_t d_alpha(const RootSystem&, const ParabolicData& pd, int alpha) {
  check_alpha(pd, alpha);
  const IndexSet& adj = adjacency_row(pd, alpha);
  if (adj.empty()) return 1;
  std::int64_t sum = 0;
  for (int c : adj) sum += min_nontrivial_dim(pd.components[c].type);
  return sum;
}

std::int64_t ell_alpha(const RootSystem& rs, const ParabolicData& pd, int alpha) {
  check_alpha(pd, alpha);
  const IndexSet& adj = adjacency_row(pd, alpha);
  if (adj.empty()) return 1;
  std::int64_t best = -1;
  for (int c : adj) {
    const std::int64_t v =
        ell_AB(rs, pd.sigma, ABConfig{{alpha}, pd.components[c].vertices}).count;
    if (best < 0 || v < best) best = v;
  }
  return best;
}

std::int64_t d_P(const RootSystem& rs, const ParabolicData& pd) {
  if (pd.complement.empty())
    fail(ErrorCode::SigmaIsFull, "d(P) undefined when sigma is the whole diagram");
  std::int64_t best = -1;
  for (int alpha : pd.complement) {
    const std::int64_t v = d_alpha(rs, pd, alpha);
    if (best < 0 || v < best) best = v;
  }
  return best;
}

std::int64_t ell_P(const RootSystem& rs, const ParabolicData& pd) {
  if (pd.complement.empty())
    fail(ErrorCode::SigmaIsFull, "ell(P) undefined when sigma is the whole diagram");
  std::int64_t best = -1;
  for (int alpha : pd.complement) {
    const std::int64_t v = ell_alpha(rs, pd, alpha);
    if (best < 0 || v < best) best = v;
  }
  return best;
}

bool triviality_guarantee(const std::vector<std::int64_t>& dims,
                          std::int64_t repdim) {
  if (dims.empty())
    fail(ErrorCode::InvalidArgument, "need at least one ideal dimension");
  for (std::int64_t d : dims)
    if (d < 1) fail(ErrorCode::InvalidArgument, "ideal dimensions must be positive");
  if (repdim < 1)
    fail(ErrorCode::InvalidArgument, "representation dimension must be positive");
  const std::int64_t total = std::accumulate(dims.begin(), dims.end(),
                                             std::int64_t{0});
  return repdim < total;
}

ParabolicReport make_parabolic_report(const RootSystem& rs,
                                      const ParabolicData& pd) {
  if (pd.complement.empty())
    fail(ErrorCode::SigmaIsFull, "report undefined when sigma is the whole diagram");
  ParabolicReport rep;
  for (int alpha : pd.complement) {
    ParabolicReport::Row row;
    row.alpha = alpha;
    row.d = d_alpha(rs, pd, alpha);
    row.ell = ell_alpha(rs, pd, alpha);
    for (int c : adjacency_row(pd, alpha)) {
      const LeviComponent& comp = pd.components[c];
      row.adjacent.push_back(
          {comp.vertices, comp.type, min_nontrivial_dim(comp.type)});
    }
    rep.rows.push_back(std::move(row));
  }
  rep.d_P = d_P(rs, pd);
  rep.ell_P = ell_P(rs, pd);
  return rep;
}

}  // namespace bottkit
