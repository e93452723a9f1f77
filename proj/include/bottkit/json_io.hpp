#pragma once

#include <json.hpp>

#include "bottkit/bott.hpp"
#include "bottkit/oracle.hpp"
#include "bottkit/parabolic.hpp"
#include "bottkit/vanishing.hpp"

// JSON schema "bott-kit/1". Conventions: vertex indices are 1-based in
// documents; weights are arrays of integers (fcoords); roots are arrays of
// simple-root coefficients; big integers and rationals are decimal strings.
namespace bottkit::json_io {

using nlohmann::json;

inline constexpr const char* kSchema = "bott-kit/1";

json indices_to_json(const IndexSet& s);          // 0-based -> 1-based array
IndexSet indices_from_json(const json& j);        // 1-based array -> 0-based

json weight_to_json(const Weight& w);             // integral weights only
Weight weight_from_json(const json& j);

json root_to_json(const Root& r);
Root root_from_json(const json& j);

std::string bigint_to_string(const BigInt& v);
BigInt bigint_from_string(const std::string& s);

std::string rat_to_string(const Rat& v);          // "p" or "p/q"

json cohomology_to_json(const CohomologyResult& r);
CohomologyResult cohomology_from_json(const json& j);

json table_to_json(const std::vector<LineBundleEntry>& t);
std::vector<LineBundleEntry> table_from_json(const json& j);

json witness_to_json(const SignificanceWitness& w);
SignificanceWitness witness_from_json(const json& j);

json ell_to_json(const EllResult& r);
EllResult ell_from_json(const json& j);

json semisimple_to_json(const SemisimpleResult& r);
SemisimpleResult semisimple_from_json(const json& j);

json h1_to_json(const H1Range& r);
H1Range h1_from_json(const json& j);

json parabolic_report_to_json(const ParabolicReport& r);
ParabolicReport parabolic_report_from_json(const json& j);

json sweep_report_to_json(const oracle::SweepReport& r);
oracle::SweepReport sweep_report_from_json(const json& j);

json roots_listing_to_json(const RootSystem& rs);

// {"schema": "bott-kit/1", "command": ..., "input": ..., "result": ...}
json envelope(const std::string& command, json input, json result);

}  // namespace bottkit::json_io
