#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "terracini/constructions.hpp"
#include "terracini/terracini.hpp"

namespace terracini {

// Insertion-ordered JSON keeps field order stable, so identical inputs and
// seeds serialize to identical bytes.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "terracini-report/1";

template <class F>
Json field_to_json(const F& field) {
    if constexpr (F::is_prime_field) {
        return Json{{"Fp", field.modulus()}};
    } else {
        return Json("Q");
    }
}

template <class F>
Json point_set_to_json(const F& field, const PointSet<F>& set) {
    Json pts = Json::array();
    for (const auto& p : set.points) {
        Json row = Json::array();
        for (const auto& c : p.coords) row.push_back(field.to_string(c));
        pts.push_back(row);
    }
    return Json{{"n", set.n}, {"field", field_to_json(field)}, {"points", pts}};
}

// Input format: {"n": int, "field": "Q"|{"Fp": p}, "points": [["1","2","1/3"], ...]}.
template <class F>
PointSet<F> point_set_from_json(const F& field, const Json& doc) {
    if (!doc.contains("n") || !doc.contains("points"))
        throw InvalidInput("point set JSON needs \"n\" and \"points\"");
    const unsigned n = doc.at("n").get<unsigned>();
    std::vector<ProjectivePoint<F>> pts;
    for (const auto& row : doc.at("points")) {
        std::vector<typename F::Elem> coords;
        for (const auto& c : row) coords.push_back(field.from_string(c.template get<std::string>()));
        if (coords.size() != n + 1) throw InvalidInput("point has wrong coordinate count");
        pts.push_back(make_point(field, std::move(coords)));
    }
    return make_point_set(field, n, std::move(pts));
}

inline Json verdict_to_json(const MembershipVerdict& v) {
    return Json{{"rank", v.rank},
                {"conditions", v.conditions},
                {"ambient_dim", v.ambient_dim},
                {"h0_positive", v.h0_positive},
                {"h1_positive", v.h1_positive},
                {"member", v.member},
                {"certified", v.certified},
                {"method", rank_method_name(v.method)},
                {"characteristic", v.characteristic}};
}

inline Json threshold_to_json(const ThresholdReport& t) {
    return Json{{"n", t.n},
                {"m", t.m},
                {"e", t.e},
                {"ambient_dim", t.ambient_dim},
                {"h0_restricted", t.h0_restricted},
                {"paper_k", t.paper_k},
                {"minimal_k", t.minimal_k},
                {"k_max_span", t.k_max_span},
                {"feasible", t.feasible}};
}

inline Json probe_to_json(const ProbeReport& p) {
    Json hist = Json::object();
    for (const auto& [r, c] : p.rank_histogram) hist[std::to_string(r)] = c;
    return Json{{"target", p.target},
                {"n", p.n},
                {"d", p.d},
                {"k", p.k},
                {"trials", p.trials},
                {"seed", p.seed},
                {"rank_histogram", hist},
                {"expected_generic_rank", p.expected_generic_rank},
                {"max_rank_observed", p.max_rank_observed},
                {"defect_flagged", p.defect_flagged},
                {"members_found", p.members_found},
                {"summary", p.members_found > 0
                                ? std::string("member found / defect flagged")
                                : std::string("no member found in ") + std::to_string(p.trials) +
                                      " trials"},
                {"evidence", p.evidence}};
}

template <class F>
Json example_to_json(const F& field, const CertifiedExample<F>& ex) {
    return Json{{"construction", ex.construction},
                {"n", ex.n},
                {"m", ex.m},
                {"k", ex.k},
                {"seed", ex.seed},
                {"points", point_set_to_json(field, ex.points)},
                {"verdict", verdict_to_json(ex.verdict)},
                {"curve_level",
                 Json{{"rank", ex.curve.rank},
                      {"conditions", ex.curve.conditions},
                      {"system_dim", ex.curve.system_dim},
                      {"h0", ex.curve.h0},
                      {"h1", ex.curve.h1}}},
                {"certified", ex.certified}};
}

// Curve specification documents:
//   {"type":"rnc","dprime":3}
//   {"type":"rational","components":[["1","0"],["0","1"],["0","0"]]}
//   {"type":"weierstrass","a":"1","b":"1"}
template <class F>
RationalCurve<F> rational_curve_from_json(const F& field, const Json& doc) {
    const std::string type = doc.at("type").get<std::string>();
    if (type == "rnc") return rational_normal_curve(field, doc.at("dprime").get<unsigned>());
    if (type == "rational") {
        std::vector<BinaryForm<typename F::Elem>> comps;
        for (const auto& row : doc.at("components")) {
            BinaryForm<typename F::Elem> f;
            for (const auto& c : row)
                f.coeffs.push_back(field.from_string(c.template get<std::string>()));
            comps.push_back(std::move(f));
        }
        return make_rational_curve(field, std::move(comps));
    }
    throw InvalidInput("unknown rational curve type: " + type);
}

template <class F>
WeierstrassCurve<F> weierstrass_from_json(const F& field, const Json& doc) {
    if (doc.at("type").get<std::string>() != "weierstrass")
        throw InvalidInput("expected a weierstrass curve document");
    return make_weierstrass(field, field.from_string(doc.at("a").get<std::string>()),
                            field.from_string(doc.at("b").get<std::string>()));
}

template <class F>
Json curve_to_json(const F& field, const RationalCurve<F>& curve) {
    Json comps = Json::array();
    for (const auto& c : curve.components) {
        Json row = Json::array();
        for (const auto& x : c.coeffs) row.push_back(field.to_string(x));
        comps.push_back(row);
    }
    return Json{{"type", "rational"}, {"degree", curve.degree}, {"components", comps}};
}

// Wraps a payload in the versioned report envelope.
inline Json report_envelope(const std::string& command, std::uint64_t seed, Json payload) {
    return Json{{"schema", kSchema}, {"command", command}, {"seed", seed},
                {"report", std::move(payload)}};
}

inline std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

// CSV rows for scan tables: one ThresholdReport plus the certified
// minimal-k construction per parameter cell.
inline std::string scan_csv_header() {
    return "n,m,e,ambient_dim,h0_restricted,paper_k,minimal_k,k_max_span,feasible,"
           "k,ambient_rank,conditions,member,certified\n";
}

template <class F>
std::string scan_csv_row(const ThresholdReport& t, const CertifiedExample<F>* ex) {
    std::ostringstream os;
    os << t.n << ',' << t.m << ',' << t.e << ',' << t.ambient_dim << ',' << t.h0_restricted << ','
       << t.paper_k << ',' << t.minimal_k << ',' << t.k_max_span << ','
       << (t.feasible ? "true" : "false") << ',';
    if (ex) {
        os << ex->k << ',' << ex->verdict.rank << ',' << ex->verdict.conditions << ','
           << (ex->verdict.member ? "true" : "false") << ',' << (ex->certified ? "true" : "false");
    } else {
        os << ",,,,";
    }
    os << '\n';
    return os.str();
}

}  // namespace terracini
