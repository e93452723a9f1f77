#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bottkit/bottkit.h"

using nlohmann::json;

namespace {

int status_to_exit(bk_status s) {
  switch (s) {
    case BK_OK: return 0;
    case BK_ERR_PARSE: return 2;
    case BK_ERR_DOMAIN: return 3;
    case BK_ERR_ORACLE: return 4;
    default: return 1;
  }
}

int report_error(bk_status s) {
  std::fprintf(stderr, "error [%s]: %s\n", bk_last_error_code(),
               bk_last_error_message());
  return status_to_exit(s);
}

[[noreturn]] void usage_error(const std::string& msg) {
  std::fprintf(stderr, "error [ParseError]: %s\n", msg.c_str());
  std::exit(2);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (start <= s.size()) {
    const size_t comma = s.find(',', start);
    if (comma == std::string::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, comma - start));
    start = comma + 1;
  }
  return parts;
}

long long parse_int(const std::string& tok, const char* what) {
  size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    usage_error(std::string("invalid ") + what + " '" + tok + "'");
  }
  if (used != tok.size())
    usage_error(std::string("invalid ") + what + " '" + tok + "'");
  return v;
}

// "1,3,4" or "" -> 1-based vertex list
std::vector<int> parse_indices(const std::string& s, const char* what) {
  std::vector<int> out;
  if (s.empty()) return out;
  for (const std::string& tok : split_commas(s)) {
    const long long v = parse_int(tok, what);
    if (v < 1 || v > 1000)
      usage_error(std::string(what) + " index " + tok + " out of range (1-based)");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

// fcoords; weights are accepted in fundamental coordinates only
std::vector<long long> parse_weight(const std::string& s) {
  std::vector<long long> out;
  if (s.empty())
    usage_error("empty weight; give fundamental coordinates like -1,0");
  for (const std::string& tok : split_commas(s))
    out.push_back(parse_int(tok, "weight coordinate (fundamental basis)"));
  return out;
}

std::pair<long long, long long> parse_range(const std::string& s) {
  const size_t dots = s.find("..");
  if (dots == std::string::npos)
    usage_error("range must look like -5..5, got '" + s + "'");
  const long long lo = parse_int(s.substr(0, dots), "range bound");
  const long long hi = parse_int(s.substr(dots + 2), "range bound");
  if (lo > hi) usage_error("empty range '" + s + "'");
  return {lo, hi};
}

struct Handle {
  bk_diagram* d = nullptr;
  ~Handle() { bk_diagram_destroy(d); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { bk_string_free(s); }
};

std::string render_weight(const json& w) {
  std::string out = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += w[i].dump();
  }
  return out + ")";
}

std::string render_root(const json& r) {
  std::string out = "[";
  for (size_t i = 0; i < r.size(); ++i) {
    if (i) out += " ";
    out += r[i].dump();
  }
  return out + "]";
}

std::string render_set(const json& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s[i].dump();
  }
  return out + "}";
}

void print_cohomology(const json& r) {
  if (r.at("kind") == "all_zero") {
    std::printf("all cohomology groups vanish\n");
    return;
  }
  std::printf("concentrated in degree %lld\n",
              r.at("degree").get<long long>());
  std::printf("highest weight %s\n",
              render_weight(r.at("highest_weight")).c_str());
  std::printf("dimension %s\n", r.at("dimension").get<std::string>().c_str());
}

void print_witnesses(const json& ws) {
  std::printf("significant roots (%zu):\n", ws.size());
  for (const json& w : ws)
    std::printf("  delta %s  witness %s  (%s)\n",
                render_root(w.at("delta")).c_str(),
                render_root(w.at("sigma_delta")).c_str(),
                w.at("fastpath").get<std::string>().c_str());
}

int run_roots(const std::string& type, const std::string& format) {
  Handle h;
  bk_status s = bk_diagram_create(type.c_str(), &h.d);
  if (s != BK_OK) return report_error(s);
  OwnedString out;
  s = bk_roots_json(h.d, &out.s);
  if (s != BK_OK) return report_error(s);
  const json doc = json::parse(out.s);
  if (format == "json") {
    std::printf("%s\n", out.s);
    return 0;
  }
  const json& r = doc.at("result");
  std::printf("type %s  rank %lld\n", r.at("type").get<std::string>().c_str(),
              r.at("rank").get<long long>());
  std::printf("%lld positive roots\n", r.at("count").get<long long>());
  for (const json& row : r.at("roots"))
    std::printf("  %s  height %lld  square %s  fcoords %s\n",
                render_root(row.at("coeffs")).c_str(),
                row.at("height").get<long long>(),
                row.at("square").get<std::string>().c_str(),
                render_weight(row.at("fcoords")).c_str());
  return 0;
}

int run_bott(const std::string& type, const std::string& sigma,
             const std::optional<std::string>& weight,
             const std::optional<std::string>& table,
             const std::string& format) {
  if (weight.has_value() == table.has_value())
    usage_error("give exactly one of --weight or --table");
  const std::vector<int> sig = parse_indices(sigma, "sigma");
  Handle h;
  bk_status s = bk_diagram_create(type.c_str(), &h.d);
  if (s != BK_OK) return report_error(s);
  OwnedString out;
  if (weight) {
    const std::vector<long long> w = parse_weight(*weight);
    s = bk_bott_json(h.d, sig.data(), static_cast<int>(sig.size()), w.data(),
                     static_cast<int>(w.size()), &out.s);
    if (s != BK_OK) return report_error(s);
    const json doc = json::parse(out.s);
    if (format == "json") {
      std::printf("%s\n", out.s);
      return 0;
    }
    std::printf("type %s  sigma %s  weight %s\n", type.c_str(),
                render_set(doc.at("input").at("sigma")).c_str(),
                render_weight(doc.at("input").at("weight")).c_str());
    print_cohomology(doc.at("result"));
    return 0;
  }
  const auto [lo, hi] = parse_range(*table);
  s = bk_line_bundle_table_json(h.d, sig.data(), static_cast<int>(sig.size()),
                                lo, hi, &out.s);
  if (s != BK_OK) return report_error(s);
  const json doc = json::parse(out.s);
  if (format == "json") {
    std::printf("%s\n", out.s);
    return 0;
  }
  std::printf("type %s  sigma %s  characters with coordinates %lld..%lld\n",
              type.c_str(), render_set(doc.at("input").at("sigma")).c_str(), lo,
              hi);
  for (const json& e : doc.at("result")) {
    const json& r = e.at("result");
    if (r.at("kind") == "all_zero")
      std::printf("  %s  zero\n", render_weight(e.at("weight")).c_str());
    else
      std::printf("  %s  degree %lld  dimension %s\n",
                  render_weight(e.at("weight")).c_str(),
                  r.at("degree").get<long long>(),
                  r.at("dimension").get<std::string>().c_str());
  }
  return 0;
}

int run_invariants(const std::string& type, const std::string& sigma,
                   const std::string& format) {
  const std::vector<int> sig = parse_indices(sigma, "sigma");
  Handle h;
  bk_status s = bk_diagram_create(type.c_str(), &h.d);
  if (s != BK_OK) return report_error(s);
  OwnedString out;
  s = bk_invariants_json(h.d, sig.data(), static_cast<int>(sig.size()), &out.s);
  if (s != BK_OK) return report_error(s);
  const json doc = json::parse(out.s);
  if (format == "json") {
    std::printf("%s\n", out.s);
    return 0;
  }
  std::printf("type %s  sigma %s\n", type.c_str(),
              render_set(doc.at("input").at("sigma")).c_str());
  const json& r = doc.at("result");
  for (const json& row : r.at("rows")) {
    std::string comps;
    for (const json& c : row.at("adjacent")) {
      if (!comps.empty()) comps += ", ";
      comps += c.at("type").get<std::string>() +
               render_set(c.at("vertices")) + " d_i=" +
               std::to_string(c.at("min_dim").get<long long>());
    }
    if (comps.empty()) comps = "isolated";
    std::printf("alpha %lld: d=%lld ell=%lld  %s\n",
                row.at("alpha").get<long long>(), row.at("d").get<long long>(),
                row.at("ell").get<long long>(), comps.c_str());
  }
  const long long dp = r.at("d_P").get<long long>();
  std::printf("d(P) = %lld\nell(P) = %lld\n", dp,
              r.at("ell_P").get<long long>());
  if (dp > 1)
    std::printf("rigidity threshold: bundles generated in dimension < %lld are rigid\n",
                dp);
  else
    std::printf("rigidity threshold: none (d(P) = 1)\n");
  return 0;
}

int run_vanish_main(const std::string& type, const std::string& sigma,
                    const std::string& weight, const std::string& a,
                    const std::string& b, const std::string& format) {
  const std::vector<int> sig = parse_indices(sigma, "sigma");
  const std::vector<int> av = parse_indices(a, "A");
  const std::vector<int> bv = parse_indices(b, "B");
  const std::vector<long long> w = parse_weight(weight);
  Handle h;
  bk_status s = bk_diagram_create(type.c_str(), &h.d);
  if (s != BK_OK) return report_error(s);
  OwnedString out;
  s = bk_vanish_main_json(h.d, sig.data(), static_cast<int>(sig.size()),
                          w.data(), static_cast<int>(w.size()), av.data(),
                          static_cast<int>(av.size()), bv.data(),
                          static_cast<int>(bv.size()), &out.s);
  if (s != BK_OK) return report_error(s);
  const json doc = json::parse(out.s);
  if (format == "json") {
    std::printf("%s\n", out.s);
    return 0;
  }
  const json& r = doc.at("result");
  const long long q = r.at("q_max").get<long long>();
  std::printf("type %s  sigma %s  A %s  B %s  weight %s\n", type.c_str(),
              render_set(doc.at("input").at("sigma")).c_str(),
              render_set(doc.at("input").at("A")).c_str(),
              render_set(doc.at("input").at("B")).c_str(),
              render_weight(doc.at("input").at("weight")).c_str());
  if (q > 0)
    std::printf("q_max = %lld: H^q = 0 for 0 <= q < %lld\n", q, q);
  else
    std::printf("q_max = 0: empty guarantee\n");
  print_witnesses(r.at("witnesses"));
  return 0;
}

int run_vanish_h1(const std::string& type, const std::string& sigma,
                  long long dim, const std::string& format) {
  const std::vector<int> sig = parse_indices(sigma, "sigma");
  Handle h;
  bk_status s = bk_diagram_create(type.c_str(), &h.d);
  if (s != BK_OK) return report_error(s);
  OwnedString out;
  s = bk_vanish_h1_json(h.d, sig.data(), static_cast<int>(sig.size()), dim,
                        &out.s);
  if (s != BK_OK) return report_error(s);
  const json doc = json::parse(out.s);
  if (format == "json") {
    std::printf("%s\n", out.s);
    return 0;
  }
  const json& r = doc.at("result");
  std::printf("type %s  sigma %s  generating dimension %lld\n", type.c_str(),
              render_set(doc.at("input").at("sigma")).c_str(), dim);
  std::printf("d(P) = %lld  ell(P) = %lld\n", r.at("d_P").get<long long>(),
              r.at("ell_P").get<long long>());
  if (r.at("guarantee").get<bool>())
    std::printf("guarantee: H^q = 0 for 0 < q < %lld\n",
                r.at("ell_P").get<long long>());
  else
    std::printf("no guarantee (generating dimension %lld >= d(P) %lld)\n", dim,
                r.at("d_P").get<long long>());
  std::printf("rigid: %s\n", r.at("rigid").get<bool>() ? "yes" : "no");
  return 0;
}

int run_vanish_semi(const std::string& type, const std::string& sigma,
                    const std::vector<std::string>& weights,
                    const std::string& format) {
  const std::vector<int> sig = parse_indices(sigma, "sigma");
  Handle h;
  bk_status s = bk_diagram_create(type.c_str(), &h.d);
  if (s != BK_OK) return report_error(s);
  const int rank = bk_diagram_rank(h.d);
  std::vector<long long> flat;
  for (const std::string& ws : weights) {
    const std::vector<long long> w = parse_weight(ws);
    if (static_cast<int>(w.size()) != rank)
      usage_error("weight '" + ws + "' must have " + std::to_string(rank) +
                  " coordinates");
    flat.insert(flat.end(), w.begin(), w.end());
  }
  OwnedString out;
  s = bk_vanish_semi_json(h.d, sig.data(), static_cast<int>(sig.size()),
                          flat.data(), static_cast<int>(weights.size()),
                          &out.s);
  if (s != BK_OK) return report_error(s);
  const json doc = json::parse(out.s);
  if (format == "json") {
    std::printf("%s\n", out.s);
    return 0;
  }
  const json& r = doc.at("result");
  std::printf("type %s  sigma %s  %zu weight(s)\n", type.c_str(),
              render_set(doc.at("input").at("sigma")).c_str(), weights.size());
  std::printf("B = %s\n", render_set(r.at("B")).c_str());
  for (const json& e : r.at("constrained"))
    std::printf("weight %s: A = %s, ell = %lld\n",
                render_weight(e.at("weight")).c_str(),
                render_set(e.at("A")).c_str(), e.at("ell").get<long long>());
  if (r.at("unbounded").get<bool>())
    std::printf("unbounded: H^q = 0 for all q > 0\n");
  else
    std::printf("q_max = %lld: H^q = 0 for 0 < q < %lld\n",
                r.at("q_max").get<long long>(), r.at("q_max").get<long long>());
  return 0;
}

int run_sweep(const std::string& type, const std::string& sigma,
              const std::string& a, const std::string& b, long long lo,
              long long hi, unsigned long long seed,
              unsigned long long max_exhaustive, int threads,
              const std::string& format) {
  const std::vector<int> sig = parse_indices(sigma, "sigma");
  const std::vector<int> av = parse_indices(a, "A");
  const std::vector<int> bv = parse_indices(b, "B");
  Handle h;
  bk_status s = bk_diagram_create(type.c_str(), &h.d);
  if (s != BK_OK) return report_error(s);
  OwnedString out;
  s = bk_sweep_json(h.d, sig.data(), static_cast<int>(sig.size()), av.data(),
                    static_cast<int>(av.size()), bv.data(),
                    static_cast<int>(bv.size()), lo, hi, seed, max_exhaustive,
                    threads, &out.s);
  if (s != BK_OK) return report_error(s);
  const json doc = json::parse(out.s);
  const json& r = doc.at("result");
  const size_t violations = r.at("violations").size();
  if (format == "json") {
    std::printf("%s\n", out.s);
  } else {
    std::printf("type %s  sigma %s  A %s  B %s  box %lld..%lld\n", type.c_str(),
                render_set(doc.at("input").at("sigma")).c_str(),
                render_set(doc.at("input").at("A")).c_str(),
                render_set(doc.at("input").at("B")).c_str(), lo, hi);
    std::printf("box total %llu (%s), seed %llu\n",
                r.at("box_total").get<unsigned long long>(),
                r.at("exhaustive").get<bool>() ? "exhaustive" : "sampled",
                r.at("seed").get<unsigned long long>());
    std::printf("checked %llu  regular %llu  singular %llu\n",
                r.at("checked").get<unsigned long long>(),
                r.at("regular").get<unsigned long long>(),
                r.at("singular").get<unsigned long long>());
    std::printf("bound ell(A,B) = %lld\n", r.at("bound").get<long long>());
    if (violations == 0) {
      std::printf("violations: none\n");
    } else {
      std::printf("violations: %zu\n", violations);
      for (const json& v : r.at("violations"))
        std::printf("  %s at weight %s%s\n",
                    v.at("kind").get<std::string>().c_str(),
                    render_weight(v.at("fcoords")).c_str(),
                    v.contains("delta")
                        ? (" root " + render_root(v.at("delta"))).c_str()
                        : "");
    }
  }
  if (violations != 0) {
    std::fprintf(stderr, "error [OracleViolation]: %zu violation(s) found\n",
                 violations);
    return 4;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology vanishing for homogeneous bundles on G/P"};
  app.require_subcommand(1);
  std::string format = "text";

  std::string type, sigma, weight, a, b;
  std::optional<std::string> opt_weight, opt_table;
  std::vector<std::string> semi_weights;
  long long dim = 0, lo = -4, hi = 4;
  unsigned long long seed = 0, max_exhaustive = 1ull << 20;
  int threads = 1;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  auto add_type = [&](CLI::App* cmd) {
    cmd->add_option("--type", type, "diagram, e.g. A4 or A2xB2")->required();
  };
  auto add_sigma = [&](CLI::App* cmd) {
    cmd->add_option("--sigma", sigma,
                    "parabolic vertex set, 1-based, comma separated; \"\" for "
                    "the Borel")
        ->required();
  };

  CLI::App* roots = app.add_subcommand("roots", "list positive roots");
  add_type(roots);
  add_format(roots);

  CLI::App* bott = app.add_subcommand(
      "bott", "cohomology of one irreducible bundle, or a character table");
  add_type(bott);
  add_sigma(bott);
  bott->add_option("--weight", opt_weight,
                   "highest weight in fundamental coordinates, e.g. -2 or "
                   "-1,0 (root coordinates are not accepted)");
  bott->add_option("--table", opt_table,
                   "character coordinate range, e.g. -5..5");
  add_format(bott);

  CLI::App* vanish =
      app.add_subcommand("vanish", "vanishing criteria");
  vanish->require_subcommand(1);
  CLI::App* vmain = vanish->add_subcommand(
      "main", "H^q = 0 for q < ell(A,B) under the sign condition");
  add_type(vmain);
  add_sigma(vmain);
  vmain->add_option("--weight", weight,
                    "highest weight in fundamental coordinates")
      ->required();
  vmain->add_option("--a", a, "A vertices (complement of sigma), 1-based")
      ->required();
  vmain->add_option("--b", b, "B vertices (inside sigma), 1-based; \"\" for "
                             "empty")
      ->required();
  add_format(vmain);

  CLI::App* vh1 = vanish->add_subcommand(
      "h1", "H^q = 0 for 0 < q < ell(P) when the generating dimension is "
            "below d(P)");
  add_type(vh1);
  add_sigma(vh1);
  vh1->add_option("--dim", dim, "generating representation dimension")
      ->required();
  add_format(vh1);

  CLI::App* vsemi = vanish->add_subcommand(
      "semi", "bound for a completely reducible fiber from its highest "
              "weights");
  add_type(vsemi);
  add_sigma(vsemi);
  vsemi->add_option("--weight", semi_weights,
                    "highest weight in fundamental coordinates (repeatable)")
      ->required();
  add_format(vsemi);

  CLI::App* invariants =
      app.add_subcommand("invariants", "d(alpha), ell(alpha), d(P), ell(P)");
  add_type(invariants);
  add_sigma(invariants);
  add_format(invariants);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "brute-force check: index(weight+gamma) >= ell(A,B) on a box");
  add_type(sweep);
  add_sigma(sweep);
  sweep->add_option("--a", a, "A vertices, 1-based")->required();
  sweep->add_option("--b", b, "B vertices, 1-based; \"\" for empty")->required();
  sweep->add_option("--lo", lo, "box lower bound")->capture_default_str();
  sweep->add_option("--hi", hi, "box upper bound")->capture_default_str();
  sweep->add_option("--seed", seed, "sampling seed")->capture_default_str();
  sweep->add_option("--max-exhaustive", max_exhaustive,
                    "largest box enumerated exhaustively")
      ->capture_default_str();
  sweep->add_option("--threads", threads, "worker threads")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  add_format(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (roots->parsed()) return run_roots(type, format);
  if (bott->parsed()) return run_bott(type, sigma, opt_weight, opt_table, format);
  if (vmain->parsed()) return run_vanish_main(type, sigma, weight, a, b, format);
  if (vh1->parsed()) return run_vanish_h1(type, sigma, dim, format);
  if (vsemi->parsed()) return run_vanish_semi(type, sigma, semi_weights, format);
  if (invariants->parsed()) return run_invariants(type, sigma, format);
  if (sweep->parsed()) return run_sweep(type, sigma, a, b, lo, hi, seed,
                                        max_exhaustive, threads, format);
  return 2;
}
