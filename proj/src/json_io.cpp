#include "bottkit/json_io.hpp"

#include <sstream>

namespace bottkit::json_io {

namespace {

[[noreturn]] void bad_doc(const std::string& what) {
  fail(ErrorCode::ParseError, "malformed document: " + what);
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    bad_doc(std::string("missing field '") + name + "'");
  return j.at(name);
}

long long int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) bad_doc(std::string("field '") + name + "' not an integer");
  return v.get<long long>();
}

std::string string_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_string()) bad_doc(std::string("field '") + name + "' not a string");
  return v.get<std::string>();
}

}  // namespace

json indices_to_json(const IndexSet& s) {
  json a = json::array();
  for (int i : s) a.push_back(i + 1);
  return a;
}

IndexSet indices_from_json(const json& j) {
  if (!j.is_array()) bad_doc("index set is not an array");
  IndexSet s;
  for (const json& v : j) {
    if (!v.is_number_integer()) bad_doc("index is not an integer");
    const long long raw = v.get<long long>();
    if (raw < 1) bad_doc("vertex indices are 1-based");
    s.push_back(static_cast<int>(raw - 1));
  }
  return normalized_index_set(std::move(s));
}

json weight_to_json(const Weight& w) {
  if (!w.is_integral())
    fail(ErrorCode::InternalError, "serializing a non-integral weight");
  json a = json::array();
  for (const Rat& f : w.fcoords)
    a.push_back(numerator(f).convert_to<long long>());
  return a;
}

Weight weight_from_json(const json& j) {
  if (!j.is_array()) bad_doc("weight is not an array");
  std::vector<long long> v;
  for (const json& x : j) {
    if (!x.is_number_integer()) bad_doc("weight coordinate is not an integer");
    v.push_back(x.get<long long>());
  }
  return weight_from_ints(v);
}

json root_to_json(const Root& r) {
  json a = json::array();
  for (int c : r.coeffs) a.push_back(c);
  return a;
}

Root root_from_json(const json& j) {
  if (!j.is_array()) bad_doc("root is not an array");
  Root r;
  for (const json& x : j) {
    if (!x.is_number_integer()) bad_doc("root coefficient is not an integer");
    r.coeffs.push_back(x.get<int>());
  }
  return r;
}

std::string bigint_to_string(const BigInt& v) { return v.str(); }

BigInt bigint_from_string(const std::string& s) {
  try {
    return BigInt(s);
  } catch (const std::exception&) {
    bad_doc("invalid integer literal '" + s + "'");
  }
}

std::string rat_to_string(const Rat& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

json cohomology_to_json(const CohomologyResult& r) {
  if (r.kind == CohomologyResult::Kind::AllZero)
    return json{{"kind", "all_zero"}};
  return json{{"kind", "concentrated"},
              {"degree", r.degree},
              {"highest_weight", weight_to_json(r.highest_weight)},
              {"dimension", bigint_to_string(r.dimension)}};
}

CohomologyResult cohomology_from_json(const json& j) {
  CohomologyResult r;
  const std::string kind = string_field(j, "kind");
  if (kind == "all_zero") return r;
  if (kind != "concentrated") bad_doc("unknown cohomology kind '" + kind + "'");
  r.kind = CohomologyResult::Kind::Concentrated;
  r.degree = static_cast<int>(int_field(j, "degree"));
  r.highest_weight = weight_from_json(field(j, "highest_weight"));
  r.dimension = bigint_from_string(string_field(j, "dimension"));
  return r;
}

json table_to_json(const std::vector<LineBundleEntry>& t) {
  json a = json::array();
  for (const LineBundleEntry& e : t)
    a.push_back(json{{"weight", weight_to_json(e.weight)},
                     {"result", cohomology_to_json(e.result)}});
  return a;
}

std::vector<LineBundleEntry> table_from_json(const json& j) {
  if (!j.is_array()) bad_doc("table is not an array");
  std::vector<LineBundleEntry> t;
  for (const json& e : j)
    t.push_back({weight_from_json(field(e, "weight")),
                 cohomology_from_json(field(e, "result"))});
  return t;
}

json witness_to_json(const SignificanceWitness& w) {
  return json{{"delta", root_to_json(w.delta)},
              {"sigma_delta", root_to_json(w.sigma_delta)},
              {"fastpath", fast_path_name(w.fastpath)}};
}

SignificanceWitness witness_from_json(const json& j) {
  SignificanceWitness w;
  w.delta = root_from_json(field(j, "delta"));
  w.sigma_delta = root_from_json(field(j, "sigma_delta"));
  const std::string f = string_field(j, "fastpath");
  if (f == "case1") w.fastpath = FastPath::Case1;
  else if (f == "case2") w.fastpath = FastPath::Case2;
  else if (f == "case3") w.fastpath = FastPath::Case3;
  else if (f == "none") w.fastpath = FastPath::None;
  else bad_doc("unknown fastpath '" + f + "'");
  return w;
}

json ell_to_json(const EllResult& r) {
  json ws = json::array();
  for (const SignificanceWitness& w : r.witnesses)
    ws.push_back(witness_to_json(w));
  return json{{"count", r.count}, {"witnesses", std::move(ws)}};
}

EllResult ell_from_json(const json& j) {
  EllResult r;
  r.count = int_field(j, "count");
  const json& ws = field(j, "witnesses");
  if (!ws.is_array()) bad_doc("witnesses is not an array");
  for (const json& w : ws) r.witnesses.push_back(witness_from_json(w));
  return r;
}

json semisimple_to_json(const SemisimpleResult& r) {
  json entries = json::array();
  for (const auto& e : r.constrained)
    entries.push_back(json{{"weight", weight_to_json(e.weight)},
                           {"A", indices_to_json(e.A)},
                           {"ell", e.ell}});
  json out{{"unbounded", r.unbounded},
           {"B", indices_to_json(r.B)},
           {"constrained", std::move(entries)}};
  if (!r.unbounded) out["q_max"] = r.q_max;
  return out;
}

SemisimpleResult semisimple_from_json(const json& j) {
  SemisimpleResult r;
  const json& u = field(j, "unbounded");
  if (!u.is_boolean()) bad_doc("unbounded is not a boolean");
  r.unbounded = u.get<bool>();
  r.B = indices_from_json(field(j, "B"));
  for (const json& e : field(j, "constrained"))
    r.constrained.push_back({weight_from_json(field(e, "weight")),
                             indices_from_json(field(e, "A")),
                             int_field(e, "ell")});
  r.q_max = r.unbounded ? 0 : int_field(j, "q_max");
  return r;
}

json h1_to_json(const H1Range& r) {
  json out{{"guarantee", r.guarantee}, {"d_P", r.d_P}, {"ell_P", r.ell_P}};
  if (r.guarantee)
    out["range"] = json{{"from_exclusive", 0}, {"to_exclusive", r.ell_P}};
  else
    out["range"] = nullptr;
  return out;
}

H1Range h1_from_json(const json& j) {
  H1Range r;
  const json& g = field(j, "guarantee");
  if (!g.is_boolean()) bad_doc("guarantee is not a boolean");
  r.guarantee = g.get<bool>();
  r.d_P = int_field(j, "d_P");
  r.ell_P = int_field(j, "ell_P");
  return r;
}

json parabolic_report_to_json(const ParabolicReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json comps = json::array();
    for (const auto& c : row.adjacent)
      comps.push_back(json{{"vertices", indices_to_json(c.vertices)},
                           {"type", to_string(c.type)},
                           {"min_dim", c.min_dim}});
    rows.push_back(json{{"alpha", row.alpha + 1},
                        {"d", row.d},
                        {"ell", row.ell},
                        {"adjacent", std::move(comps)}});
  }
  return json{{"rows", std::move(rows)},
              {"d_P", r.d_P},
              {"ell_P", r.ell_P},
              {"rigidity_threshold", r.d_P}};
}

ParabolicReport parabolic_report_from_json(const json& j) {
  ParabolicReport r;
  for (const json& row : field(j, "rows")) {
    ParabolicReport::Row out;
    out.alpha = static_cast<int>(int_field(row, "alpha")) - 1;
    out.d = int_field(row, "d");
    out.ell = int_field(row, "ell");
    for (const json& c : field(row, "adjacent")) {
      const std::string type = string_field(c, "type");
      if (type.size() < 2) bad_doc("bad component type '" + type + "'");
      out.adjacent.push_back(
          {indices_from_json(field(c, "vertices")),
           SimpleTypeId{type[0], std::stoi(type.substr(1))},
           int_field(c, "min_dim")});
    }
    r.rows.push_back(std::move(out));
  }
  r.d_P = int_field(j, "d_P");
  r.ell_P = int_field(j, "ell_P");
  return r;
}

json sweep_report_to_json(const oracle::SweepReport& r) {
  json vs = json::array();
  for (const auto& v : r.violations) {
    json row{{"fcoords", v.fcoords}, {"kind", v.kind}};
    if (!v.delta.empty()) row["delta"] = v.delta;
    vs.push_back(std::move(row));
  }
  return json{{"exhaustive", r.exhaustive},
              {"seed", r.seed},
              {"box_total", r.box_total},
              {"checked", r.checked},
              {"regular", r.regular},
              {"singular", r.singular},
              {"bound", r.bound},
              {"violations", std::move(vs)},
              {"runtime_ms", r.runtime_ms}};
}

oracle::SweepReport sweep_report_from_json(const json& j) {
  oracle::SweepReport r;
  const json& e = field(j, "exhaustive");
  if (!e.is_boolean()) bad_doc("exhaustive is not a boolean");
  r.exhaustive = e.get<bool>();
  r.seed = field(j, "seed").get<std::uint64_t>();
  r.box_total = field(j, "box_total").get<std::uint64_t>();
  r.checked = field(j, "checked").get<std::uint64_t>();
  r.regular = field(j, "regular").get<std::uint64_t>();
  r.singular = field(j, "singular").get<std::uint64_t>();
  r.bound = int_field(j, "bound");
  for (const json& v : field(j, "violations")) {
    oracle::SweepViolation out;
    for (const json& x : field(v, "fcoords"))
      out.fcoords.push_back(x.get<long long>());
    out.kind = string_field(v, "kind");
    if (v.contains("delta"))
      for (const json& x : v.at("delta")) out.delta.push_back(x.get<int>());
    r.violations.push_back(std::move(out));
  }
  r.runtime_ms = field(j, "runtime_ms").get<std::int64_t>();
  return r;
}

json roots_listing_to_json(const RootSystem& rs) {
  json rows = json::array();
  for (const Root& r : rs.positive_roots()) {
    json f = json::array();
    for (const Rat& x : rs.fundamental_coords(r))
      f.push_back(numerator(x).convert_to<long long>());
    rows.push_back(json{{"coeffs", root_to_json(r)},
                        {"height", r.height()},
                        {"square", rat_to_string(rs.square(r))},
                        {"fcoords", std::move(f)}});
  }
  return json{{"type", rs.diagram().type_string()},
              {"rank", rs.rank()},
              {"count", rows.size()},
              {"roots", std::move(rows)}};
}

json envelope(const std::string& command, json input, json result) {
  return json{{"schema", kSchema},
              {"command", command},
              {"input", std::move(input)},
              {"result", std::move(result)}};
}

}  // namespace bottkit::json_io
