#include "bottkit/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace bottkit::oracle {

std::vector<Root> roots_by_reflections(const DynkinDiagram& d) {
  const int n = d.rank();
  std::set<std::vector<int>> orbit;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<int> c(n, 0);
    c[i] = 1;
    orbit.insert(c);
    frontier.push_back(c);
  }
  // s_i in root coordinates: c -> c - (cartan * c)_i e_i.
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& c : frontier) {
      for (int i = 0; i < n; ++i) {
        int k = 0;
        for (int j = 0; j < n; ++j) k += d.cartan()[i][j] * c[j];
        std::vector<int> image = c;
        image[i] -= k;
        if (orbit.insert(image).second) next.push_back(std::move(image));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Root> positive;
  for (const auto& c : orbit) {
    const Root r{c};
    if (r.is_positive()) positive.push_back(r);
  }
  std::sort(positive.begin(), positive.end(), root_order_less);
  return positive;
}

MinDimResult min_dim_scan(const SimpleTypeId& t, int cap) {
  if (cap < 1) fail(ErrorCode::InvalidArgument, "scan cap must be at least 1");
  const DynkinDiagram d = DynkinDiagram::build({t});
  const BilinearForm form = BilinearForm::standard(d);
  const std::vector<Root> roots = roots_by_reflections(d);
  const int n = d.rank();

  // Own Weyl product over the reflection-generated roots.
  auto dimension_of = [&](const std::vector<int>& f) {
    Rat dim(1);
    for (const Root& r : roots) {
      Rat num(0), den(0);
      for (int i = 0; i < n; ++i) {
        if (r.coeffs[i] == 0) continue;
        const Rat step = Rat(r.coeffs[i]) * form.half_square(i);
        num += (f[i] + 1) * step;
        den += step;
      }
      dim *= num / den;
    }
    if (denominator(dim) != 1)
      fail(ErrorCode::InternalError, "oracle dimension product not an integer");
    return numerator(dim);
  };

  MinDimResult best;
  std::vector<int> f(n, 0);
  while (true) {
    // odometer over {0..cap}^n, ascending lex, last coordinate fastest
    int k = n;
    while (k > 0) {
      if (f[k - 1] < cap) { ++f[k - 1]; break; }
      f[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
    const BigInt dim = dimension_of(f);
    if (best.dimension == 0 || dim < best.dimension) {
      best.dimension = dim;
      best.witness.fcoords.assign(f.begin(), f.end());
    }
  }
  return best;
}

SweepSpec SweepSpec::standard(const RootSystem& rs, IndexSet sigma,
                              ABConfig cfg, long long lo, long long hi) {
  if (lo > hi) fail(ErrorCode::InvalidArgument, "empty sweep box");
  SweepSpec spec;
  spec.sigma = normalized_index_set(std::move(sigma));
  spec.cfg.A = normalized_index_set(std::move(cfg.A));
  spec.cfg.B = normalized_index_set(std::move(cfg.B));
  validate_ab_config(rs, spec.sigma, spec.cfg);
  spec.bounds.assign(rs.rank(), {lo, hi});
  for (int i : spec.cfg.A) {
    const long long top = std::min(hi, -2ll);
    if (lo > top)
      fail(ErrorCode::InvalidArgument, "sweep box has no valid A coordinates");
    spec.bounds[i] = {lo, top};
  }
  for (int i : spec.cfg.B) spec.bounds[i] = {0, 0};
  return spec;
}

namespace {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  // rejection sampling; avoids distribution objects whose output is
  // implementation-defined
  const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
  while (true) {
    const std::uint64_t x = rng();
    if (x < limit) return x % n;
  }
}

}  // namespace

SweepReport index_bound_sweep(const RootSystem& rs, const SweepSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  validate_ab_config(rs, spec.sigma, spec.cfg);
  if (static_cast<int>(spec.bounds.size()) != rs.rank())
    fail(ErrorCode::DimensionMismatch, "bounds length does not match rank");
  for (const auto& [lo, hi] : spec.bounds)
    if (lo > hi) fail(ErrorCode::InvalidArgument, "empty sweep box");

  const EllResult ell = ell_AB(rs, spec.sigma, spec.cfg);

  std::uint64_t total = 1;
  bool overflow = false;
  for (const auto& [lo, hi] : spec.bounds) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (total > (~std::uint64_t{0}) / span) { overflow = true; break; }
    total *= span;
  }

  SweepReport report;
  report.seed = spec.seed;
  report.bound = ell.count;
  report.exhaustive = !overflow && total <= spec.sample_cap;
  report.box_total = overflow ? ~std::uint64_t{0} : total;

  // Ranks to visit: the full box, or a seed-determined sample of it. The
  // list is fixed before sharding so the outcome is thread-count invariant.
  std::vector<std::uint64_t> sampled;
  std::uint64_t visit_count = total;
  if (!report.exhaustive) {
    if (overflow)
      fail(ErrorCode::InvalidArgument, "sweep box too large to enumerate");
    std::mt19937_64 rng(spec.seed);
    sampled.resize(spec.sample_cap);
    for (auto& r : sampled) r = uniform_below(rng, total);
    visit_count = sampled.size();
  }

  auto unrank = [&](std::uint64_t rank_value) {
    std::vector<long long> f(rs.rank());
    for (int i = rs.rank() - 1; i >= 0; --i) {
      const auto [lo, hi] = spec.bounds[i];
      const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
      f[i] = lo + static_cast<long long>(rank_value % span);
      rank_value /= span;
    }
    return f;
  };

  struct ShardResult {
    std::uint64_t checked = 0, regular = 0, singular = 0;
    std::vector<SweepViolation> violations;
  };
  const int threads = std::max(1, spec.threads);
  std::vector<ShardResult> shards(threads);

  auto run_shard = [&](int shard_id) {
    ShardResult& out = shards[shard_id];
    const std::uint64_t begin = visit_count * shard_id / threads;
    const std::uint64_t end = visit_count * (shard_id + 1) / threads;
    for (std::uint64_t v = begin; v < end; ++v) {
      const std::uint64_t rank_value = report.exhaustive ? v : sampled[v];
      const std::vector<long long> f = unrank(rank_value);
      bool ok = true;
      for (int i : spec.cfg.A) ok &= f[i] < 0;
      for (int i : spec.cfg.B) ok &= f[i] == 0;
      if (!ok) continue;
      ++out.checked;
      Weight shifted = weight_from_ints(f);
      for (auto& c : shifted.fcoords) c += 1;
      if (rs.is_singular(shifted)) {
        ++out.singular;
        continue;
      }
      ++out.regular;
      int idx = 0;
      bool pairing_bad = false;
      std::vector<int> bad_delta;
      for (const Root& r : rs.positive_roots())
        if (rs.inner(shifted, r) < 0) ++idx;
      for (const SignificanceWitness& w : ell.witnesses) {
        if (rs.inner(shifted, w.delta) >= 0) {
          pairing_bad = true;
          bad_delta = w.delta.coeffs;
          break;
        }
      }
      if (idx < ell.count)
        out.violations.push_back({f, "index_below_bound", {}});
      if (pairing_bad)
        out.violations.push_back({f, "significant_pairing", bad_delta});
    }
  };

  if (threads == 1) {
    run_shard(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int s = 0; s < threads; ++s) pool.emplace_back(run_shard, s);
    for (auto& th : pool) th.join();
  }

  for (const ShardResult& s : shards) {
    report.checked += s.checked;
    report.regular += s.regular;
    report.singular += s.singular;
    report.violations.insert(report.violations.end(), s.violations.begin(),
                             s.violations.end());
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const SweepViolation& a, const SweepViolation& b) {
              if (a.fcoords != b.fcoords) return a.fcoords < b.fcoords;
              if (a.kind != b.kind) return a.kind < b.kind;
              return a.delta < b.delta;
            });
  report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

void require_clean(const SweepReport& report) {
  if (report.violations.empty()) return;
  const SweepViolation& v = report.violations.front();
  std::ostringstream os;
  os << "sweep found " << report.violations.size() << " violation(s); first: "
     << v.kind << " at fcoords (";
  for (size_t i = 0; i < v.fcoords.size(); ++i) {
    if (i) os << ',';
    os << v.fcoords[i];
  }
  os << ')';
  if (!v.delta.empty()) {
    os << " root [";
    for (size_t i = 0; i < v.delta.size(); ++i) {
      if (i) os << ' ';
      os << v.delta[i];
    }
    os << ']';
  }
  fail(ErrorCode::OracleViolation, os.str());
}

}  // namespace bottkit::oracle
