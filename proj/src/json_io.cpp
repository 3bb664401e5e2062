#include "stabkit/json_io.hpp"

#include <set>
#include <variant>

#include "stabkit/error.hpp"

namespace stabkit {

namespace {

Json labels_of(const std::vector<int>& vs, const Graph& g) {
    Json a = Json::array();
    for (int v : vs) a.push_back(g.label(v));
    return a;
}

Rational rational_field(const Json& j, const std::string& where) {
    if (!j.is_string()) throw FormatError(where + ": expected a rational string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw FormatError(where + ": " + e.what());
    }
}

}  // namespace

Json rep_to_json(const StabbedRepresentation& r) {
    Json j;
    j["stabs"] = Json::array();
    for (const auto& s : r.stabs) j["stabs"].push_back(to_string(s));
    j["rects"] = Json::object();
    for (int i = 0; i < r.size(); ++i) {
        if (j["rects"].contains(r.labels[i])) throw std::invalid_argument("rep_to_json: duplicate label " + r.labels[i]);
        const Rect& q = r.rects[i];
        j["rects"][r.labels[i]] = {to_string(q.x_lo), to_string(q.x_hi), to_string(q.y_lo), to_string(q.y_hi)};
    }
    return j;
}

StabbedRepresentation rep_from_json(const Json& j) {
    if (!j.is_object()) throw FormatError("representation: expected an object");
    if (!j.contains("stabs") || !j["stabs"].is_array()) throw FormatError("representation: missing \"stabs\" array");
    if (!j.contains("rects") || !j["rects"].is_object()) throw FormatError("representation: missing \"rects\" object");
    StabbedRepresentation r;
    for (const auto& s : j["stabs"]) r.stabs.push_back(rational_field(s, "stabs"));
    for (const auto& [label, v] : j["rects"].items()) {
        if (!v.is_array() || v.size() != 4) throw FormatError("rect " + label + ": expected [x_lo, x_hi, y_lo, y_hi]");
        std::string w = "rect " + label;
        Rational c[4];
        for (int i = 0; i < 4; ++i) c[i] = rational_field(v[i], w);
        r.add(label, Rect{c[0], c[1], c[2], c[3]});
    }
    return r;
}

StabbedRepresentation parse_rep(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("representation JSON: ") + e.what());
    }
    return rep_from_json(j);
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json report_to_json(const ValidationReport& report) {
    auto pairs = [](const std::vector<std::pair<std::string, std::string>>& v) {
        Json a = Json::array();
        for (const auto& [x, y] : v) a.push_back({x, y});
        return a;
    };
    Json j;
    j["valid"] = report.valid();
    j["missing_edges"] = pairs(report.missing_edges);
    j["extra_edges"] = pairs(report.extra_edges);
    j["unstabbed"] = report.unstabbed;
    j["multi_stabbed"] = report.multi_stabbed;
    j["malformed"] = report.malformed;
    return j;
}

Json certificate_to_json(const AsteroidalCertificate& cert, const Graph& g) {
    Json j;
    j["class"] = cert.class_name;
    j["parts"] = Json::array();
    j["nested"] = Json::array();
    for (int i = 0; i < 3; ++i) {
        j["parts"].push_back(labels_of(cert.parts[i], g));
        j["nested"].push_back(cert.nested[i] ? certificate_to_json(*cert.nested[i], g) : Json(nullptr));
    }
    j["paths"] = Json::array();
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            if (i != k) j["paths"].push_back({{"from", i}, {"to", k}, {"path", labels_of(cert.paths[i][k], g)}});
    return j;
}

Json interval_rep_to_json(const IntervalRepresentation& rep, const Graph& g) {
    Json j = Json::object();
    for (int v = 0; v < g.n(); ++v) j[g.label(v)] = {to_string(rep[v].lo), to_string(rep[v].hi)};
    return j;
}

Json witness_to_json(const NonIntervalWitness& w, const Graph& g) {
    Json j;
    if (const auto* c = std::get_if<ChordlessCycle>(&w)) {
        j["kind"] = "chordless_cycle";
        j["vertices"] = labels_of(c->cycle, g);
    } else {
        const auto& at = std::get<AsteroidalTriple>(w);
        j["kind"] = "asteroidal_triple";
        j["vertices"] = labels_of({at.vertices[0], at.vertices[1], at.vertices[2]}, g);
    }
    return j;
}

Json stab_numbers_to_json(const StabNumbers& s) {
    auto v = [&](const std::optional<int>& x) { return x ? Json(*x) : Json(">" + std::to_string(s.k_max)); };
    return {{"stab", v(s.stab)}, {"estab", v(s.estab)}, {"k_max", s.k_max}};
}

}  // namespace stabkit
