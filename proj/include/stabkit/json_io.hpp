#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "stabkit/graph.hpp"
#include "stabkit/interval.hpp"
#include "stabkit/oracle.hpp"
#include "stabkit/recognizers.hpp"
#include "stabkit/representation.hpp"

namespace stabkit {

using Json = nlohmann::json;

// {"stabs": [...], "rects": {label: [x_lo, x_hi, y_lo, y_hi]}}, rationals as strings.
Json rep_to_json(const StabbedRepresentation& r);
// Throws FormatError on anything malformed.
StabbedRepresentation rep_from_json(const Json& j);
StabbedRepresentation parse_rep(const std::string& text);

// Two-space indent, sorted keys, trailing newline.
std::string dump_json(const Json& j);

Json report_to_json(const ValidationReport& report);
Json certificate_to_json(const AsteroidalCertificate& cert, const Graph& g);
Json interval_rep_to_json(const IntervalRepresentation& rep, const Graph& g);
Json witness_to_json(const NonIntervalWitness& w, const Graph& g);
Json stab_numbers_to_json(const StabNumbers& s);

}  // namespace stabkit
