#include "bottkit/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace bottkit {

namespace {

std::string fmt_index(int i) { return std::to_string(i + 1); }  // messages are 1-based

// Local (0-based) edges of one simple factor with the Cartan entries
// a_ij = 2(alpha_i, alpha_j)/(alpha_i, alpha_i) in Bourbaki numbering.
struct FactorEdge {
  int i, j;
  int aij, aji;
};

std::vector<FactorEdge> factor_edges(const SimpleTypeId& t) {
  const int n = t.rank;
  std::vector<FactorEdge> e;
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) e.push_back({i, i + 1, -1, -1});
  };
  switch (t.letter) {
    case 'A':
      chain(0, n - 1);
      break;
    case 'B':  // alpha_n short: a_{n-1,n} = -1, a_{n,n-1} = -2
      chain(0, n - 2);
      e.push_back({n - 2, n - 1, -1, -2});
      break;
    case 'C':  // alpha_n long: a_{n-1,n} = -2, a_{n,n-1} = -1
      chain(0, n - 2);
      e.push_back({n - 2, n - 1, -2, -1});
      break;
    case 'D':
      chain(0, n - 2);
      e.push_back({n - 3, n - 1, -1, -1});
      break;
    case 'E':  // chain 1-3-4-5-... with 2 attached to 4
      e.push_back({0, 2, -1, -1});
      for (int i = 2; i < n - 1; ++i) e.push_back({i, i + 1, -1, -1});
      e.push_back({1, 3, -1, -1});
      break;
    case 'F':  // alpha_3, alpha_4 short
      e.push_back({0, 1, -1, -1});
      e.push_back({1, 2, -1, -2});
      e.push_back({2, 3, -1, -1});
      break;
    case 'G':  // alpha_1 short
      e.push_back({0, 1, -3, -1});
      break;
  }
  return e;
}

}  // namespace

std::string to_string(const SimpleTypeId& t) {
  return std::string(1, t.letter) + std::to_string(t.rank);
}

bool is_valid_simple_type(char letter, int rank) {
  switch (letter) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

DynkinDiagram DynkinDiagram::build(const std::vector<SimpleTypeId>& factors) {
  if (factors.empty())
    fail(ErrorCode::InvalidType, "diagram needs at least one simple factor");
  DynkinDiagram d;
  d.factors_ = factors;
  for (const auto& t : factors) {
    if (!is_valid_simple_type(t.letter, t.rank))
      fail(ErrorCode::InvalidType, "invalid simple type " + to_string(t));
    d.factor_offset_.push_back(d.rank_);
    d.rank_ += t.rank;
  }
  d.cartan_.assign(d.rank_, std::vector<int>(d.rank_, 0));
  d.factor_of_.assign(d.rank_, 0);
  d.half_square_.assign(d.rank_, Rat(1));
  for (int f = 0; f < static_cast<int>(factors.size()); ++f) {
    const int off = d.factor_offset_[f];
    const int n = factors[f].rank;
    for (int i = 0; i < n; ++i) {
      d.factor_of_[off + i] = f;
      d.cartan_[off + i][off + i] = 2;
    }
    // Half squared lengths propagate along edges via d_j/d_i = a_ij/a_ji,
    // then the factor is normalized so its long roots have d = 1.
    for (const auto& edge : factor_edges(factors[f])) {
      d.cartan_[off + edge.i][off + edge.j] = edge.aij;
      d.cartan_[off + edge.j][off + edge.i] = edge.aji;
      d.half_square_[off + edge.j] =
          d.half_square_[off + edge.i] * edge.aij / edge.aji;
    }
    Rat top(0);
    for (int i = 0; i < n; ++i) top = std::max(top, d.half_square_[off + i]);
    for (int i = 0; i < n; ++i) d.half_square_[off + i] /= top;
    if (f) d.type_string_ += 'x';
    d.type_string_ += to_string(factors[f]);
  }
  return d;
}

DynkinDiagram DynkinDiagram::parse(const std::string& spec) {
  std::vector<SimpleTypeId> factors;
  size_t pos = 0;
  while (pos < spec.size()) {
    const size_t token_at = pos;
    const char letter = static_cast<char>(std::toupper(
        static_cast<unsigned char>(spec[pos])));
    if (letter < 'A' || letter > 'G')
      fail(ErrorCode::ParseError, "expected type letter A-G at position " +
                                      std::to_string(token_at) + " in '" +
                                      spec + "'");
    ++pos;
    if (pos >= spec.size() || !std::isdigit(static_cast<unsigned char>(spec[pos])))
      fail(ErrorCode::ParseError, "expected rank digits at position " +
                                      std::to_string(pos) + " in '" + spec + "'");
    long rank = 0;
    while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) {
      rank = rank * 10 + (spec[pos] - '0');
      if (rank > 64)
        fail(ErrorCode::InvalidType, "rank too large at position " +
                                         std::to_string(token_at) + " in '" +
                                         spec + "'");
      ++pos;
    }
    if (!is_valid_simple_type(letter, static_cast<int>(rank)))
      fail(ErrorCode::InvalidType,
           "invalid simple type " + std::string(1, letter) +
               std::to_string(rank) + " at position " + std::to_string(token_at));
    factors.push_back({letter, static_cast<int>(rank)});
    if (pos < spec.size()) {
      if (spec[pos] != 'x' && spec[pos] != 'X')
        fail(ErrorCode::ParseError, "expected 'x' separator at position " +
                                        std::to_string(pos) + " in '" + spec + "'");
      ++pos;
      if (pos == spec.size())
        fail(ErrorCode::ParseError, "trailing separator in '" + spec + "'");
    }
  }
  if (factors.empty()) fail(ErrorCode::ParseError, "empty diagram spec");
  return build(factors);
}

BilinearForm BilinearForm::standard(const DynkinDiagram& d) {
  BilinearForm b;
  const int n = d.rank();
  b.gram_.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      b.gram_[i][j] = d.cartan()[i][j] * d.half_square()[i];
  }
  return b;
}

BilinearForm BilinearForm::rescaled(const DynkinDiagram& d, int factor_id,
                                    const Rat& scale) const {
  if (factor_id < 0 || factor_id >= static_cast<int>(d.factors().size()))
    fail(ErrorCode::IndexOutOfRange,
         "factor " + std::to_string(factor_id) + " out of range");
  if (scale <= 0)
    fail(ErrorCode::InvalidArgument, "form scale must be positive");
  BilinearForm b = *this;
  const int n = d.rank();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (d.factor_of(i) == factor_id && d.factor_of(j) == factor_id)
        b.gram_[i][j] *= scale;
    }
  }
  return b;
}

int Root::height() const {
  int h = 0;
  for (int c : coeffs) h += c;
  return h;
}

bool Root::is_positive() const {
  bool nonzero = false;
  for (int c : coeffs) {
    if (c < 0) return false;
    if (c > 0) nonzero = true;
  }
  return nonzero;
}

IndexSet Root::support() const {
  IndexSet s;
  for (int i = 0; i < static_cast<int>(coeffs.size()); ++i)
    if (coeffs[i] != 0) s.push_back(i);
  return s;
}

bool root_order_less(const Root& a, const Root& b) {
  const int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a.coeffs < b.coeffs;
}

bool Weight::is_integral() const {
  for (const Rat& f : fcoords)
    if (denominator(f) != 1) return false;
  return true;
}

bool Weight::is_dominant() const {
  for (const Rat& f : fcoords)
    if (f < 0) return false;
  return true;
}

Weight weight_from_ints(const std::vector<long long>& v) {
  Weight w;
  w.fcoords.reserve(v.size());
  for (long long x : v) w.fcoords.emplace_back(x);
  return w;
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.fcoords.size() != b.fcoords.size())
    fail(ErrorCode::DimensionMismatch, "weight lengths differ");
  Weight r = a;
  for (size_t i = 0; i < r.fcoords.size(); ++i) r.fcoords[i] += b.fcoords[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  if (a.fcoords.size() != b.fcoords.size())
    fail(ErrorCode::DimensionMismatch, "weight lengths differ");
  Weight r = a;
  for (size_t i = 0; i < r.fcoords.size(); ++i) r.fcoords[i] -= b.fcoords[i];
  return r;
}

std::vector<Root> positive_roots_by_closure(const DynkinDiagram& d) {
  const int n = d.rank();
  std::map<std::vector<int>, int> seen;
  std::vector<Root> roots;
  std::vector<std::vector<Root>> by_height(2);
  for (int i = 0; i < n; ++i) {
    std::vector<int> c(n, 0);
    c[i] = 1;
    seen.emplace(c, 1);
    by_height[1].push_back(Root{c});
  }
  // Root strings: beta + alpha_i is a root iff p - <beta, alpha_i-check> >= 1
  // where p is the depth of the string below beta. Everything below a given
  // height is already generated, so one upward pass per height suffices.
  for (int h = 1; h < static_cast<int>(by_height.size()); ++h) {
    for (const Root& beta : by_height[h]) {
      for (int i = 0; i < n; ++i) {
        int k = 0;
        for (int j = 0; j < n; ++j) k += d.cartan()[i][j] * beta.coeffs[j];
        int p = 0;
        std::vector<int> down = beta.coeffs;
        for (int t = 1; t <= beta.coeffs[i]; ++t) {
          down[i] -= 1;
          if (!seen.count(down)) break;  // strings are unbroken intervals
          p = t;
        }
        if (p - k >= 1) {
          std::vector<int> up = beta.coeffs;
          up[i] += 1;
          if (seen.emplace(up, 1).second) {
            if (h + 1 >= static_cast<int>(by_height.size()))
              by_height.resize(h + 2);
            by_height[h + 1].push_back(Root{up});
          }
        }
      }
    }
  }
  for (const auto& level : by_height)
    for (const Root& r : level) roots.push_back(r);
  std::sort(roots.begin(), roots.end(), root_order_less);
  return roots;
}

std::vector<IndexSet> connected_components(const DynkinDiagram& d,
                                           const IndexSet& vertices) {
  IndexSet verts = normalized_index_set(vertices);
  for (int v : verts)
    if (v < 0 || v >= d.rank())
      fail(ErrorCode::IndexOutOfRange, "vertex " + fmt_index(v) + " out of range");
  std::vector<IndexSet> comps;
  std::vector<bool> used(verts.size(), false);
  for (size_t s = 0; s < verts.size(); ++s) {
    if (used[s]) continue;
    IndexSet comp;
    std::vector<size_t> stack{s};
    used[s] = true;
    while (!stack.empty()) {
      const size_t cur = stack.back();
      stack.pop_back();
      comp.push_back(verts[cur]);
      for (size_t t = 0; t < verts.size(); ++t) {
        if (!used[t] && d.adjacent(verts[cur], verts[t])) {
          used[t] = true;
          stack.push_back(t);
        }
      }
    }
    comps.push_back(normalized_index_set(std::move(comp)));
  }
  return comps;
}

RootSystem RootSystem::build(const DynkinDiagram& d) {
  return build(d, BilinearForm::standard(d));
}

RootSystem RootSystem::build(const DynkinDiagram& d, const BilinearForm& form) {
  if (form.rank() != d.rank())
    fail(ErrorCode::DimensionMismatch, "form rank does not match diagram");
  RootSystem rs;
  rs.diagram_ = d;
  rs.form_ = form;
  rs.positive_ = positive_roots_by_closure(d);

  // Exact inverse of the Cartan matrix by Gauss-Jordan elimination.
  const int n = d.rank();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = d.cartan()[i][j];
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (m[row][col] != 0) { pivot = row; break; }
    if (pivot < 0) fail(ErrorCode::InternalError, "singular Cartan matrix");
    std::swap(m[col], m[pivot]);
    const Rat inv = Rat(1) / m[col][col];
    for (int j = 0; j < 2 * n; ++j) m[col][j] *= inv;
    for (int row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rat factor = m[row][col];
      for (int j = 0; j < 2 * n; ++j) m[row][j] -= factor * m[col][j];
    }
  }
  rs.cartan_inverse_.assign(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.cartan_inverse_[i][j] = m[i][n + j];
  return rs;
}

int RootSystem::root_lookup(const std::vector<int>& coeffs) const {
  Root probe{coeffs};
  auto it = std::lower_bound(positive_.begin(), positive_.end(), probe,
                             root_order_less);
  if (it != positive_.end() && it->coeffs == coeffs)
    return static_cast<int>(it - positive_.begin());
  return -1;
}

bool RootSystem::is_positive_root(const std::vector<int>& coeffs) const {
  if (static_cast<int>(coeffs.size()) != rank())
    fail(ErrorCode::DimensionMismatch, "coordinate length does not match rank");
  return root_lookup(coeffs) >= 0;
}

Root RootSystem::checked_root(const std::vector<int>& coeffs) const {
  if (static_cast<int>(coeffs.size()) != rank())
    fail(ErrorCode::DimensionMismatch, "coordinate length does not match rank");
  if (root_lookup(coeffs) >= 0) return Root{coeffs};
  std::vector<int> neg(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) neg[i] = -coeffs[i];
  if (root_lookup(neg) >= 0) return Root{coeffs};
  std::ostringstream os;
  os << "not a root:";
  for (int c : coeffs) os << ' ' << c;
  fail(ErrorCode::NotARoot, os.str());
}

void RootSystem::check_rank(const Weight& w) const {
  if (static_cast<int>(w.fcoords.size()) != rank())
    fail(ErrorCode::DimensionMismatch, "weight length does not match rank");
}

Rat RootSystem::inner(const Weight& a, const Root& r) const {
  check_rank(a);
  if (static_cast<int>(r.coeffs.size()) != rank())
    fail(ErrorCode::DimensionMismatch, "root length does not match rank");
  // (a, sum c_i alpha_i) = sum c_i f_i(a) d_i
  Rat v(0);
  for (int i = 0; i < rank(); ++i) {
    if (r.coeffs[i] == 0) continue;
    v += a.fcoords[i] * r.coeffs[i] * form_.half_square(i);
  }
  return v;
}

Rat RootSystem::inner(const Root& a, const Root& b) const {
  if (static_cast<int>(a.coeffs.size()) != rank() ||
      static_cast<int>(b.coeffs.size()) != rank())
    fail(ErrorCode::DimensionMismatch, "root length does not match rank");
  Rat v(0);
  for (int i = 0; i < rank(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (b.coeffs[j] == 0) continue;
      v += Rat(a.coeffs[i]) * b.coeffs[j] * form_.gram(i, j);
    }
  }
  return v;
}

Rat RootSystem::inner(const Weight& a, const Weight& b) const {
  check_rank(a);
  check_rank(b);
  const std::vector<Rat> rb = root_coords(b);
  Rat v(0);
  for (int i = 0; i < rank(); ++i)
    v += a.fcoords[i] * rb[i] * form_.half_square(i);
  return v;
}

std::vector<Rat> RootSystem::fundamental_coords(const Root& r) const {
  if (static_cast<int>(r.coeffs.size()) != rank())
    fail(ErrorCode::DimensionMismatch, "root length does not match rank");
  std::vector<Rat> f(rank(), Rat(0));
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      f[i] += Rat(diagram_.cartan()[i][j]) * r.coeffs[j];
  return f;
}

std::vector<Rat> RootSystem::root_coords(const Weight& w) const {
  check_rank(w);
  std::vector<Rat> c(rank(), Rat(0));
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      c[i] += cartan_inverse_[i][j] * w.fcoords[j];
  return c;
}

Weight RootSystem::gamma() const {
  Weight g;
  g.fcoords.assign(rank(), Rat(1));
  return g;
}

std::optional<Root> RootSystem::singular_witness(const Weight& lambda) const {
  check_rank(lambda);
  for (const Root& r : positive_)
    if (inner(lambda, r) == 0) return r;
  return std::nullopt;
}

bool RootSystem::is_singular(const Weight& lambda) const {
  return singular_witness(lambda).has_value();
}

int RootSystem::index(const Weight& lambda) const {
  check_rank(lambda);
  int count = 0;
  for (const Root& r : positive_) {
    const Rat v = inner(lambda, r);
    if (v == 0)
      fail(ErrorCode::SingularWeight, "index undefined for singular weight");
    if (v < 0) ++count;
  }
  return count;
}

Weight RootSystem::apply_simple_reflection(int i, const Weight& w) const {
  check_rank(w);
  if (i < 0 || i >= rank())
    fail(ErrorCode::IndexOutOfRange, "reflection index " + fmt_index(i));
  // s_i(w) = w - f_i(w) alpha_i; alpha_i has fcoords = Cartan column i.
  Weight r = w;
  const Rat fi = w.fcoords[i];
  for (int j = 0; j < rank(); ++j)
    r.fcoords[j] -= fi * diagram_.cartan()[j][i];
  return r;
}

std::pair<Weight, int> RootSystem::dominantize(const Weight& lambda) const {
  check_rank(lambda);
  if (is_singular(lambda))
    fail(ErrorCode::SingularWeight, "dominantize requires a regular weight");
  Weight w = lambda;
  int count = 0;
  const int cap = static_cast<int>(positive_.size());
  while (true) {
    int neg = -1;
    for (int i = 0; i < rank(); ++i) {
      if (w.fcoords[i] < 0) { neg = i; break; }
      if (w.fcoords[i] == 0)
        fail(ErrorCode::InternalError, "regular orbit hit a chamber wall");
    }
    if (neg < 0) return {w, count};
    if (++count > cap)
      fail(ErrorCode::InternalError, "dominantize exceeded |positive roots| steps");
    w = apply_simple_reflection(neg, w);
  }
}

Weight RootSystem::I_of(const Weight& lambda) const {
  check_rank(lambda);
  const Weight shifted = lambda + gamma();
  if (is_singular(shifted))
    fail(ErrorCode::SingularShiftedWeight,
         "weight plus gamma is singular; I undefined");
  return dominantize(shifted).first - gamma();
}

std::vector<Root> RootSystem::find_root_chain(const Root& lower,
                                              const Root& upper) const {
  if (static_cast<int>(lower.coeffs.size()) != rank() ||
      static_cast<int>(upper.coeffs.size()) != rank())
    fail(ErrorCode::DimensionMismatch, "root length does not match rank");
  if (root_lookup(lower.coeffs) < 0 || root_lookup(upper.coeffs) < 0)
    fail(ErrorCode::NotARoot, "chain endpoints must be positive roots");
  for (int i = 0; i < rank(); ++i)
    if (upper.coeffs[i] < lower.coeffs[i])
      fail(ErrorCode::NotComparable, "chain endpoints are not comparable");

  std::vector<Root> up_part{lower};
  std::vector<Root> down_part{upper};
  Root lo = lower, hi = upper;
  while (lo.coeffs != hi.coeffs) {
    std::vector<int> diff(rank());
    for (int i = 0; i < rank(); ++i) diff[i] = hi.coeffs[i] - lo.coeffs[i];
    const Root d{diff};
    // (d, d) > 0 forces some alpha in C(d) with (d, alpha) > 0; then either
    // lo + alpha or hi - alpha is a root strictly between the endpoints.
    int pick = -1;
    for (int i = 0; i < rank(); ++i) {
      if (diff[i] <= 0) continue;
      std::vector<int> e(rank(), 0);
      e[i] = 1;
      if (inner(d, Root{e}) > 0) { pick = i; break; }
    }
    if (pick < 0)
      fail(ErrorCode::InternalError, "no ascent direction in root chain");
    std::vector<int> e(rank(), 0);
    e[pick] = 1;
    const Root alpha{e};
    if (inner(lo, alpha) < 0) {
      std::vector<int> next = lo.coeffs;
      next[pick] += 1;
      if (root_lookup(next) < 0)
        fail(ErrorCode::InternalError, "root chain ascent left the root set");
      lo = Root{next};
      up_part.push_back(lo);
    } else {
      if (inner(hi, alpha) <= 0)
        fail(ErrorCode::InternalError, "root chain step has no valid direction");
      std::vector<int> next = hi.coeffs;
      next[pick] -= 1;
      if (root_lookup(next) < 0)
        fail(ErrorCode::InternalError, "root chain descent left the root set");
      hi = Root{next};
      down_part.push_back(hi);
    }
  }
  // lo == hi appears at the end of up_part and of down_part; keep one copy.
  std::vector<Root> chain = std::move(up_part);
  for (auto it = down_part.rbegin() + 1; it != down_part.rend(); ++it)
    chain.push_back(*it);
  return chain;
}

}  // namespace bottkit
