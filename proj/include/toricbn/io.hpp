#pragma once

// JSON documents: fan and curve input, and canonical output for every result
// type. Objects use sorted keys, so dumps are byte-stable.

#include <cstdint>
#include <limits>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <json.hpp>

#include "toricbn/classify.hpp"
#include "toricbn/fan.hpp"
#include "toricbn/lattice.hpp"
#include "toricbn/newton.hpp"

namespace toricbn::io {

using nlohmann::json;

// scalars

/// Machine integers stay numbers; anything wider is emitted as a decimal string.
inline json to_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

inline json to_json(const LatticeVector& v) { return json::array({to_json(v.x), to_json(v.y)}); }

inline json to_json(const RationalPoint& p) {
    if (p.is_lattice())
        return to_json(p.lattice());
    return json::array({to_string(p.x), to_string(p.y)});
}

inline Integer integer_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer())
        return Integer(j.get<std::int64_t>());
    if (j.is_number_unsigned())
        return Integer(j.get<std::uint64_t>());
    if (j.is_string()) {
        static const std::regex digits("-?[0-9]+");
        const auto& s = j.get_ref<const std::string&>();
        if (std::regex_match(s, digits))
            return Integer(s);
    }
    throw ParseError(where + ": expected an integer");
}

inline std::int64_t int64_from_json(const json& j, const std::string& where) {
    Integer v = integer_from_json(j, where);
    if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
        throw ParseError(where + ": integer out of range");
    return v.convert_to<std::int64_t>();
}

inline LatticeVector vector_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError(where + ": expected a pair [x, y]");
    return {integer_from_json(j[0], where + "[0]"), integer_from_json(j[1], where + "[1]")};
}

/// Accepts "p", "p/q" (q != 0) or a JSON integer.
inline Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer() || j.is_number_unsigned())
        return Rational(integer_from_json(j, where));
    if (!j.is_string())
        throw ParseError(where + ": expected a rational string \"p/q\"");
    static const std::regex form("(-?[0-9]+)(?:/([0-9]+))?");
    std::smatch match;
    const auto& s = j.get_ref<const std::string&>();
    if (!std::regex_match(s, match, form))
        throw ParseError(where + ": malformed rational \"" + s + "\"");
    Integer num(match[1].str());
    Integer den = match[2].matched ? Integer(match[2].str()) : Integer(1);
    if (den == 0)
        throw ParseError(where + ": zero denominator");
    return Rational(num, den);
}

// fans

/// Raw fan description before validation.
struct FanSpec {
    std::optional<std::vector<LatticeVector>> rays;
    std::string preset;
    std::int64_t a = 0;
    LatticeVector n1, n2;
};

inline FanSpec fan_spec_from_json(const json& j) {
    if (!j.is_object())
        throw ParseError("fan: expected an object");
    FanSpec spec;
    if (j.contains("rays")) {
        const auto& rays = j["rays"];
        if (!rays.is_array())
            throw ParseError("fan.rays: expected an array");
        std::vector<LatticeVector> out;
        for (std::size_t i = 0; i < rays.size(); ++i)
            out.push_back(vector_from_json(rays[i], "fan.rays[" + std::to_string(i) + "]"));
        spec.rays = std::move(out);
        return spec;
    }
    if (!j.contains("preset") || !j["preset"].is_string())
        throw ParseError("fan: needs \"rays\" or a \"preset\" name");
    spec.preset = j["preset"].get<std::string>();
    if (spec.preset == "Hirzebruch") {
        if (!j.contains("a"))
            throw ParseError("fan: preset Hirzebruch needs \"a\"");
        spec.a = int64_from_json(j["a"], "fan.a");
    } else if (spec.preset == "FakePlane") {
        if (!j.contains("n1") || !j.contains("n2"))
            throw ParseError("fan: preset FakePlane needs \"n1\" and \"n2\"");
        spec.n1 = vector_from_json(j["n1"], "fan.n1");
        spec.n2 = vector_from_json(j["n2"], "fan.n2");
    } else if (spec.preset != "P2" && spec.preset != "P1xP1" && spec.preset != "Bl3P2") {
        throw ParseError("fan: unknown preset \"" + spec.preset + "\"");
    }
    return spec;
}

inline Fan build(const FanSpec& spec) {
    if (spec.rays)
        return build_fan(*spec.rays);
    if (spec.preset == "P2")
        return preset_p2();
    if (spec.preset == "P1xP1")
        return preset_p1xp1();
    if (spec.preset == "Hirzebruch")
        return preset_hirzebruch(spec.a);
    if (spec.preset == "Bl3P2")
        return preset_bl3p2();
    return preset_fake_plane(spec.n1, spec.n2);
}

inline Fan fan_from_json(const json& j) { return build(fan_spec_from_json(j)); }

inline json to_json(const Fan& fan) {
    json rays = json::array();
    for (const auto& r : fan.rays())
        rays.push_back(to_json(r));
    return json{{"rays", rays}};
}

// curves

inline LaurentCurve::Terms curve_terms_from_json(const json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw ParseError("curve: expected {\"terms\": [...]}");
    LaurentCurve::Terms terms;
    const auto& arr = j["terms"];
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string where = "curve.terms[" + std::to_string(i) + "]";
        const auto& t = arr[i];
        if (!t.is_object() || !t.contains("exp"))
            throw ParseError(where + ": expected {\"exp\": [a, b], \"coeff\": \"p/q\"}");
        LatticeVector m = vector_from_json(t["exp"], where + ".exp");
        Rational a = t.contains("coeff") ? rational_from_json(t["coeff"], where + ".coeff") : Rational(1);
        if (!terms.emplace(m, a).second)
            throw ParseError(where + ": duplicate exponent " + to_string(m));
    }
    return terms;
}

inline LaurentCurve curve_from_json(const json& j) { return LaurentCurve(curve_terms_from_json(j)); }

inline json to_json(const LaurentCurve& curve) {
    json terms = json::array();
    for (const auto& [m, a] : curve.terms())
        terms.push_back(json{{"exp", to_json(m)}, {"coeff", to_string(a)}});
    return json{{"terms", terms}};
}

// input documents

struct InputDocument {
    Fan fan;
    std::optional<LaurentCurve> curve;
    std::optional<std::int64_t> genus;
    std::optional<std::int64_t> cover_degree;
    std::optional<int> image_genus;
};

/// Schema errors raise ParseError; fan/curve validation raises Error.
inline InputDocument document_from_json(const json& j) {
    if (!j.is_object())
        throw ParseError("document: expected a JSON object");
    if (!j.contains("fan"))
        throw ParseError("document: missing \"fan\"");
    FanSpec spec = fan_spec_from_json(j["fan"]);
    std::optional<LaurentCurve::Terms> terms;
    if (j.contains("curve") && !j["curve"].is_null())
        terms = curve_terms_from_json(j["curve"]);
    std::optional<std::int64_t> genus, cover;
    std::optional<int> image_genus;
    if (j.contains("genus"))
        genus = int64_from_json(j["genus"], "genus");
    if (j.contains("cover_degree"))
        cover = int64_from_json(j["cover_degree"], "cover_degree");
    if (j.contains("image_genus_branch")) {
        auto b = int64_from_json(j["image_genus_branch"], "image_genus_branch");
        if (b != 0 && b != 1)
            throw ParseError("image_genus_branch: expected 0 or 1");
        image_genus = static_cast<int>(b);
    }

    InputDocument doc{build(spec), std::nullopt, genus, cover, image_genus};
    if (terms)
        doc.curve = LaurentCurve(std::move(*terms));
    return doc;
}

inline json to_json(const InputDocument& doc) {
    json j{{"fan", to_json(doc.fan)}};
    if (doc.curve)
        j["curve"] = to_json(*doc.curve);
    if (doc.genus)
        j["genus"] = *doc.genus;
    if (doc.cover_degree)
        j["cover_degree"] = *doc.cover_degree;
    if (doc.image_genus)
        j["image_genus_branch"] = *doc.image_genus;
    return j;
}

// results

template <class Range>
json integer_array(const Range& values) {
    json out = json::array();
    for (const auto& v : values)
        out.push_back(to_json(v));
    return out;
}

inline json to_json(const SmoothnessReport& r) {
    return json{{"smooth", r.smooth}, {"cone_indices", integer_array(r.cone_indices)}};
}

inline json to_json(const ClassGroup& g) {
    json classes = json::array();
    for (const auto& c : g.ray_classes)
        classes.push_back(integer_array(c));
    return json{{"rank", g.rank}, {"torsion", integer_array(g.torsion)}, {"ray_classes", classes}};
}

inline json to_json(const FakePlane& p) {
    json rays = json::array();
    for (const auto& r : p.rays)
        rays.push_back(to_json(r));
    return json{{"rays", rays},
                {"is_projective_plane", p.is_projective_plane},
                {"cone_indices", integer_array(p.cone_indices)}};
}

inline json to_json(const UnitEdge& e) {
    return json{{"ray_index", e.ray_index}, {"ray", to_json(e.ray)}, {"from", to_json(e.from)}, {"to", to_json(e.to)}};
}

inline json to_json(const Classification& c) {
    json j{{"tag", std::string(c.tag())}, {"degree", to_json(c.degree)}};
    if (const auto* f = std::get_if<FiberOfProjection>(&c.kind)) {
        j["ray_pair"] = json::array({f->ray_pair.first, f->ray_pair.second});
        j["contracted_direction"] = to_json(f->contracted_direction);
        j["edges"] = json::array({to_json(f->edges[0]), to_json(f->edges[1])});
    } else if (const auto* t = std::get_if<MapsToFakePlane>(&c.kind)) {
        j["ray_triple"] = json::array({t->ray_triple[0], t->ray_triple[1], t->ray_triple[2]});
        j["fake_plane"] = to_json(t->fake_plane);
        json cert = json::array();
        for (const auto& e : t->primitive_certificate)
            cert.push_back(to_json(e));
        j["primitive_certificate"] = cert;
    }
    return j;
}

inline json to_json(const WitnessScan& s) {
    json pairs = json::array();
    for (const auto& p : s.pairs)
        pairs.push_back(json{{"ray_pair", json::array({p.ray_pair.first, p.ray_pair.second})},
                             {"contracted_direction", to_json(p.contracted_direction)}});
    json triples = json::array();
    for (const auto& t : s.triples) {
        json cert = json::array();
        for (const auto& e : t.certificate)
            cert.push_back(to_json(e));
        triples.push_back(json{{"ray_triple", json::array({t.ray_triple[0], t.ray_triple[1], t.ray_triple[2]})},
                               {"fake_plane", to_json(t.fake_plane)},
                               {"certificate", cert}});
    }
    return json{{"pairs", pairs}, {"triples", triples}};
}

inline json to_json(const Verdict& v) {
    json j{{"tag", std::string(v.tag())},
           {"genus", v.genus},
           {"cover_degree", v.cover_degree},
           {"image_degree", v.image_degree},
           {"image_genus", v.image_genus},
           {"expected_dim", v.expected_dim}};
    std::visit(
        [&](const auto& o) {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, ExpectedDimension>) {
                j["generically_smooth"] = o.generically_smooth;
            } else if constexpr (std::is_same_v<T, NoSuchCovers>) {
                j["reason"] = o.reason;
            } else if constexpr (std::is_same_v<T, ObstructedComponent>) {
                j["family_dim"] = o.family_dim;
                j["excess"] = o.excess;
                if (o.witness)
                    j["witness"] = to_json(*o.witness);
            } else if constexpr (std::is_same_v<T, BoundarySpecialCase> || std::is_same_v<T, NotAComponent>) {
                j["family_dim"] = o.family_dim;
            } else if constexpr (std::is_same_v<T, LowDegreeBirational>) {
                if (o.witness)
                    j["witness"] = to_json(*o.witness);
            }
        },
        v.outcome);
    return j;
}

inline json to_json(const SupportLine& s) {
    return json{{"normal", to_json(s.line.normal())}, {"level", to_json(s.line.level())},
                {"argmin", [&] {
                     json a = json::array();
                     for (const auto& m : s.argmin)
                         a.push_back(to_json(m));
                     return a;
                 }()}};
}

inline json to_json(const CircumscribedPolygon& p) {
    json mu = json::array();
    for (const auto& m : p.mu)
        mu.push_back(json{{"point", to_json(m)}, {"lattice", m.is_lattice()}});
    json edges = json::array();
    for (const auto& e : p.edges) {
        json ej{{"ray_index", e.ray_index},
                {"line", to_json(p.lines[e.ray_index])},
                {"from", to_json(e.from)},
                {"to", to_json(e.to)},
                {"nu_minus", to_json(e.nu_minus)},
                {"nu_plus", to_json(e.nu_plus)}};
        ej["delta"] = e.delta ? to_json(*e.delta) : json(nullptr);
        edges.push_back(ej);
    }
    return json{{"mu", mu}, {"edges", edges}};
}

} // namespace toricbn::io
