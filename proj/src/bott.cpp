#include "bottkit/bott.hpp"

#include <string>

namespace bottkit {

namespace {

void check_sigma(const RootSystem& rs, const IndexSet& sigma) {
  for (int i : sigma)
    if (i < 0 || i >= rs.rank())
      fail(ErrorCode::IndexOutOfRange,
           "sigma vertex " + std::to_string(i + 1) + " out of range");
}

void check_sigma_dominant(const RootSystem& rs, const IndexSet& sigma,
                          const Weight& lambda) {
  if (static_cast<int>(lambda.fcoords.size()) != rs.rank())
    fail(ErrorCode::DimensionMismatch, "weight length does not match rank");
  if (!lambda.is_integral())
    fail(ErrorCode::NonIntegralWeight, "weight must have integer fcoords");
  for (int i : sigma) {
    if (lambda.fcoords[i] < 0)
      fail(ErrorCode::NotSigmaDominant,
           "fcoord " + std::to_string(i + 1) + " is negative on sigma");
  }
}

}  // namespace

CohomologyResult bott_cohomology(const RootSystem& rs, const IndexSet& sigma_in,
                                 const Weight& lambda) {
  const IndexSet sigma = normalized_index_set(sigma_in);
  check_sigma(rs, sigma);
  check_sigma_dominant(rs, sigma, lambda);

  const Weight shifted = lambda + rs.gamma();
  if (rs.is_singular(shifted)) return CohomologyResult::all_zero();

  const auto [dominant, reflections] = rs.dominantize(shifted);
  CohomologyResult res;
  res.kind = CohomologyResult::Kind::Concentrated;
  res.degree = reflections;
  res.highest_weight = dominant - rs.gamma();
  res.dimension = weyl_dimension(rs, res.highest_weight);

  // The degree is the index of lambda + gamma and cannot exceed the number of
  // positive roots outside the Levi, i.e. the complex dimension of G/P.
  int gp_dim = 0;
  for (const Root& r : rs.positive_roots()) {
    for (int i : r.support()) {
      if (!index_set_contains(sigma, i)) { ++gp_dim; break; }
    }
  }
  if (res.degree > gp_dim)
    fail(ErrorCode::InternalError,
         "cohomology degree " + std::to_string(res.degree) +
         " exceeds dim G/P = " + std::to_string(gp_dim));
  return res;
}

BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  if (static_cast<int>(lambda.fcoords.size()) != rs.rank())
    fail(ErrorCode::DimensionMismatch, "weight length does not match rank");
  if (!lambda.is_integral())
    fail(ErrorCode::NonIntegralWeight, "weight must have integer fcoords");
  if (!lambda.is_dominant())
    fail(ErrorCode::NotDominant, "Weyl dimension needs a dominant weight");
  Rat dim(1);
  for (const Root& r : rs.positive_roots()) {
    Rat num(0), den(0);
    for (int i = 0; i < rs.rank(); ++i) {
      if (r.coeffs[i] == 0) continue;
      const Rat step = Rat(r.coeffs[i]) * rs.form().half_square(i);
      num += (lambda.fcoords[i] + 1) * step;
      den += step;
    }
    dim *= num / den;
  }
  if (denominator(dim) != 1)
    fail(ErrorCode::InternalError, "Weyl dimension product is not an integer");
  return numerator(dim);
}

std::vector<LineBundleEntry> line_bundle_table(const RootSystem& rs,
                                               const IndexSet& sigma_in,
                                               long long lo, long long hi) {
  const IndexSet sigma = normalized_index_set(sigma_in);
  check_sigma(rs, sigma);
  if (lo > hi)
    fail(ErrorCode::InvalidArgument, "empty coordinate range");

  IndexSet free;
  for (int i = 0; i < rs.rank(); ++i)
    if (!index_set_contains(sigma, i)) free.push_back(i);

  const unsigned long long span = static_cast<unsigned long long>(hi - lo) + 1;
  unsigned long long total = 1;
  for (size_t k = 0; k < free.size(); ++k) {
    if (total > (1ull << 22) / span + 1)
      fail(ErrorCode::InvalidArgument, "coordinate box too large");
    total *= span;
  }
  if (total > (1ull << 22))
    fail(ErrorCode::InvalidArgument, "coordinate box too large");

  std::vector<LineBundleEntry> table;
  table.reserve(free.empty() ? 1 : total);
  std::vector<long long> vals(free.size(), lo);
  while (true) {
    Weight w;
    w.fcoords.assign(rs.rank(), Rat(0));
    for (size_t k = 0; k < free.size(); ++k) w.fcoords[free[k]] = vals[k];
    table.push_back({w, bott_cohomology(rs, sigma, w)});
    // odometer, last coordinate fastest
    size_t k = free.size();
    while (k > 0) {
      if (vals[k - 1] < hi) { ++vals[k - 1]; break; }
      vals[k - 1] = lo;
      --k;
    }
    if (k == 0) break;
  }
  return table;
}

}  // namespace bottkit
