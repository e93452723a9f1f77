#include "bottkit/bottkit.h"

#include <cstring>
#include <new>
#include <string>

#include "bottkit/json_io.hpp"

using namespace bottkit;

struct bk_diagram {
  RootSystem rs;
};

namespace {

thread_local std::string g_error_message;
thread_local std::string g_error_code;

bk_status map_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidType:
      return BK_ERR_PARSE;
    case ErrorCode::OracleViolation:
      return BK_ERR_ORACLE;
    case ErrorCode::InternalError:
      return BK_ERR_INTERNAL;
    default:
      return BK_ERR_DOMAIN;
  }
}

template <typename Fn>
bk_status guarded(Fn&& fn) {
  g_error_message.clear();
  g_error_code.clear();
  try {
    fn();
    return BK_OK;
  } catch (const Error& e) {
    g_error_message = e.what();
    g_error_code = error_code_name(e.code());
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    g_error_message = "out of memory";
    g_error_code = "OutOfMemory";
    return BK_ERR_NOMEM;
  } catch (const std::exception& e) {
    g_error_message = e.what();
    g_error_code = "InternalError";
    return BK_ERR_INTERNAL;
  }
}

bk_status invalid_argument(const char* what) {
  g_error_message = what;
  g_error_code = "InvalidArgument";
  return BK_ERR_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::operator new(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

IndexSet to_index_set(const int* data, int len) {
  if (len < 0) fail(ErrorCode::InvalidArgument, "negative index count");
  IndexSet s;
  s.reserve(len);
  for (int i = 0; i < len; ++i) s.push_back(data[i] - 1);
  return normalized_index_set(std::move(s));
}

Weight to_weight(const long long* data, int len) {
  if (len < 0) fail(ErrorCode::InvalidArgument, "negative weight length");
  return weight_from_ints(std::vector<long long>(data, data + len));
}

json_io::json sigma_input(const bk_diagram* d, const IndexSet& sigma) {
  return json_io::json{{"type", d->rs.diagram().type_string()},
                       {"sigma", json_io::indices_to_json(sigma)}};
}

}  // namespace

extern "C" {

const char* bk_last_error_message(void) { return g_error_message.c_str(); }
const char* bk_last_error_code(void) { return g_error_code.c_str(); }

void bk_string_free(char* s) { ::operator delete(s); }

bk_status bk_diagram_create(const char* type_spec, bk_diagram** out) {
  if (!type_spec || !out) return invalid_argument("null argument");
  *out = nullptr;
  return guarded([&] {
    auto d = std::make_unique<bk_diagram>(
        bk_diagram{RootSystem::build(DynkinDiagram::parse(type_spec))});
    *out = d.release();
  });
}

void bk_diagram_destroy(bk_diagram* d) { delete d; }

int bk_diagram_rank(const bk_diagram* d) { return d ? d->rs.rank() : 0; }

bk_status bk_roots_json(const bk_diagram* d, char** out_json) {
  if (!d || !out_json) return invalid_argument("null argument");
  *out_json = nullptr;
  return guarded([&] {
    json_io::json doc = json_io::envelope(
        "roots", json_io::json{{"type", d->rs.diagram().type_string()}},
        json_io::roots_listing_to_json(d->rs));
    *out_json = dup_string(doc.dump(2));
  });
}

bk_status bk_bott_json(const bk_diagram* d, const int* sigma, int sigma_len,
                       const long long* weight, int weight_len,
                       char** out_json) {
  if (!d || !out_json || (!sigma && sigma_len > 0) || (!weight && weight_len > 0))
    return invalid_argument("null argument");
  *out_json = nullptr;
  return guarded([&] {
    const IndexSet s = to_index_set(sigma, sigma_len);
    const Weight w = to_weight(weight, weight_len);
    const CohomologyResult res = bott_cohomology(d->rs, s, w);
    json_io::json input = sigma_input(d, s);
    input["weight"] = json_io::weight_to_json(w);
    json_io::json doc = json_io::envelope("bott", std::move(input),
                                          json_io::cohomology_to_json(res));
    *out_json = dup_string(doc.dump(2));
  });
}

bk_status bk_line_bundle_table_json(const bk_diagram* d, const int* sigma,
                                    int sigma_len, long long lo, long long hi,
                                    char** out_json) {
  if (!d || !out_json || (!sigma && sigma_len > 0))
    return invalid_argument("null argument");
  *out_json = nullptr;
  return guarded([&] {
    const IndexSet s = to_index_set(sigma, sigma_len);
    const auto table = line_bundle_table(d->rs, s, lo, hi);
    json_io::json input = sigma_input(d, s);
    input["lo"] = lo;
    input["hi"] = hi;
    json_io::json doc = json_io::envelope("table", std::move(input),
                                          json_io::table_to_json(table));
    *out_json = dup_string(doc.dump(2));
  });
}

bk_status bk_invariants_json(const bk_diagram* d, const int* sigma,
                             int sigma_len, char** out_json) {
  if (!d || !out_json || (!sigma && sigma_len > 0))
    return invalid_argument("null argument");
  *out_json = nullptr;
  return guarded([&] {
    const IndexSet s = to_index_set(sigma, sigma_len);
    const ParabolicData pd = analyze_parabolic(d->rs, s);
    const ParabolicReport rep = make_parabolic_report(d->rs, pd);
    json_io::json doc =
        json_io::envelope("invariants", sigma_input(d, s),
                          json_io::parabolic_report_to_json(rep));
    *out_json = dup_string(doc.dump(2));
  });
}

bk_status bk_vanish_main_json(const bk_diagram* d, const int* sigma,
                              int sigma_len, const long long* weight,
                              int weight_len, const int* a, int a_len,
                              const int* b, int b_len, char** out_json) {
  if (!d || !out_json || (!sigma && sigma_len > 0) ||
      (!weight && weight_len > 0) || (!a && a_len > 0) || (!b && b_len > 0))
    return invalid_argument("null argument");
  *out_json = nullptr;
  return guarded([&] {
    const IndexSet s = to_index_set(sigma, sigma_len);
    const Weight w = to_weight(weight, weight_len);
    const ABConfig cfg{to_index_set(a, a_len), to_index_set(b, b_len)};
    const EllResult res = theorem_main_range(d->rs, s, w, cfg);
    json_io::json input = sigma_input(d, s);
    input["weight"] = json_io::weight_to_json(w);
    input["A"] = json_io::indices_to_json(cfg.A);
    input["B"] = json_io::indices_to_json(cfg.B);
    json_io::json result = json_io::ell_to_json(res);
    result["q_max"] = res.count;
    json_io::json doc =
        json_io::envelope("vanish-main", std::move(input), std::move(result));
    *out_json = dup_string(doc.dump(2));
  });
}

bk_status bk_vanish_h1_json(const bk_diagram* d, const int* sigma,
                            int sigma_len, long long generating_dim,
                            char** out_json) {
  if (!d || !out_json || (!sigma && sigma_len > 0))
    return invalid_argument("null argument");
  *out_json = nullptr;
  return guarded([&] {
    const IndexSet s = to_index_set(sigma, sigma_len);
    const ParabolicData pd = analyze_parabolic(d->rs, s);
    const H1Range res = theorem_H1_range(d->rs, pd, generating_dim);
    json_io::json input = sigma_input(d, s);
    input["generating_dim"] = generating_dim;
    json_io::json result = json_io::h1_to_json(res);
    result["rigid"] = rigidity_check(d->rs, pd, generating_dim);
    json_io::json doc =
        json_io::envelope("vanish-h1", std::move(input), std::move(result));
    *out_json = dup_string(doc.dump(2));
  });
}

bk_status bk_vanish_semi_json(const bk_diagram* d, const int* sigma,
                              int sigma_len, const long long* weights_flat,
                              int n_weights, char** out_json) {
  if (!d || !out_json || (!sigma && sigma_len > 0) ||
      (!weights_flat && n_weights > 0))
    return invalid_argument("null argument");
  *out_json = nullptr;
  return guarded([&] {
    const IndexSet s = to_index_set(sigma, sigma_len);
    const int rank = d->rs.rank();
    std::vector<Weight> ws;
    for (int k = 0; k < n_weights; ++k)
      ws.push_back(to_weight(weights_flat + static_cast<size_t>(k) * rank, rank));
    const SemisimpleResult res = semisimple_vanishing(d->rs, s, ws);
    json_io::json jws = json_io::json::array();
    for (const Weight& w : ws) jws.push_back(json_io::weight_to_json(w));
    json_io::json input = sigma_input(d, s);
    input["weights"] = std::move(jws);
    json_io::json doc = json_io::envelope("vanish-semi", std::move(input),
                                          json_io::semisimple_to_json(res));
    *out_json = dup_string(doc.dump(2));
  });
}

bk_status bk_sweep_json(const bk_diagram* d, const int* sigma, int sigma_len,
                        const int* a, int a_len, const int* b, int b_len,
                        long long lo, long long hi, unsigned long long seed,
                        unsigned long long max_exhaustive, int threads,
                        char** out_json) {
  if (!d || !out_json || (!sigma && sigma_len > 0) || (!a && a_len > 0) ||
      (!b && b_len > 0))
    return invalid_argument("null argument");
  if (threads < 1) return invalid_argument("threads must be >= 1");
  *out_json = nullptr;
  return guarded([&] {
    const IndexSet s = to_index_set(sigma, sigma_len);
    const ABConfig cfg{to_index_set(a, a_len), to_index_set(b, b_len)};
    oracle::SweepSpec spec = oracle::SweepSpec::standard(d->rs, s, cfg, lo, hi);
    spec.seed = seed;
    spec.sample_cap = max_exhaustive;
    spec.threads = threads;
    const oracle::SweepReport report = oracle::index_bound_sweep(d->rs, spec);
    json_io::json input = sigma_input(d, s);
    input["A"] = json_io::indices_to_json(cfg.A);
    input["B"] = json_io::indices_to_json(cfg.B);
    input["lo"] = lo;
    input["hi"] = hi;
    input["seed"] = seed;
    json_io::json doc = json_io::envelope(
        "sweep", std::move(input), json_io::sweep_report_to_json(report));
    *out_json = dup_string(doc.dump(2));
  });
}

bk_status bk_weyl_dimension(const bk_diagram* d, const long long* weight,
                            int weight_len, char** out_decimal) {
  if (!d || !out_decimal || (!weight && weight_len > 0))
    return invalid_argument("null argument");
  *out_decimal = nullptr;
  return guarded([&] {
    const BigInt dim = weyl_dimension(d->rs, to_weight(weight, weight_len));
    *out_decimal = dup_string(dim.str());
  });
}

bk_status bk_parabolic_dp_lp(const bk_diagram* d, const int* sigma,
                             int sigma_len, long long* out_d_p,
                             long long* out_ell_p) {
  if (!d || !out_d_p || !out_ell_p || (!sigma && sigma_len > 0))
    return invalid_argument("null argument");
  return guarded([&] {
    const ParabolicData pd = analyze_parabolic(d->rs, to_index_set(sigma, sigma_len));
    *out_d_p = d_P(d->rs, pd);
    *out_ell_p = ell_P(d->rs, pd);
  });
}

bk_status bk_rigidity(const bk_diagram* d, const int* sigma, int sigma_len,
                      long long generating_dim, int* out_rigid) {
  if (!d || !out_rigid || (!sigma && sigma_len > 0))
    return invalid_argument("null argument");
  return guarded([&] {
    const ParabolicData pd = analyze_parabolic(d->rs, to_index_set(sigma, sigma_len));
    *out_rigid = rigidity_check(d->rs, pd, generating_dim) ? 1 : 0;
  });
}

}  // extern "C"
