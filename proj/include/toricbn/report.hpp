#pragma once

// Command implementations behind the toricbn CLI. Each returns a Report with
// a canonical JSON payload and an equivalent human-readable rendering.

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "toricbn/classify.hpp"
#include "toricbn/io.hpp"
#include "toricbn/svg.hpp"

namespace toricbn::report {

using nlohmann::json;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Report {
    json data;
    std::string text;
};

/// Values given on the command line take precedence over the document.
struct Overrides {
    std::optional<std::int64_t> genus;
    std::optional<std::int64_t> cover_degree;
    std::optional<int> image_genus;
    bool assume_integral = true;
};

namespace detail {

inline std::string join_vectors(const std::vector<LatticeVector>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i)
        s += (i ? " " : "") + to_string(vs[i]);
    return s;
}

template <class Range>
std::string join_integers(const Range& vs) {
    std::string s;
    bool first = true;
    for (const auto& v : vs) {
        s += (first ? "" : " ") + to_string(Integer(v));
        first = false;
    }
    return s;
}

inline json envelope(const std::string& command, const io::InputDocument* doc) {
    json j{{"command", command}};
    if (doc)
        j["input"] = io::to_json(*doc);
    return j;
}

inline const LaurentCurve& require_curve(const io::InputDocument& doc, const char* command) {
    if (!doc.curve)
        throw ParseError(std::string(command) + ": the document needs a \"curve\"");
    return *doc.curve;
}

inline std::string describe(const Fan& fan, const Classification& c) {
    std::ostringstream os;
    os << "classification: " << c.tag() << " (degree " << c.degree << ")\n";
    if (const auto* f = std::get_if<FiberOfProjection>(&c.kind)) {
        os << "  contracted by the projection along " << to_string(f->contracted_direction) << ", rays "
           << to_string(fan.ray(f->ray_pair.first)) << " and " << to_string(fan.ray(f->ray_pair.second)) << "\n";
    } else if (const auto* t = std::get_if<MapsToFakePlane>(&c.kind)) {
        os << "  fake plane on rays " << to_string(fan.ray(t->ray_triple[0])) << " "
           << to_string(fan.ray(t->ray_triple[1])) << " " << to_string(fan.ray(t->ray_triple[2]))
           << (t->fake_plane.is_projective_plane ? " (isomorphic to P2)" : " (singular)") << ", cone indices "
           << join_integers(t->fake_plane.cone_indices) << "\n";
    }
    return os.str();
}

} // namespace detail

inline Report cmd_fan_check(const io::InputDocument& doc) {
    const Fan& fan = doc.fan;
    auto smooth = smoothness(fan);
    auto group = class_group(fan);
    auto pairs = opposite_ray_pairs(fan);
    auto triples = zero_sum_triples(fan);

    json jp = json::array();
    for (const auto& [i, j] : pairs)
        jp.push_back(json{{"ray_pair", json::array({i, j})}});
    json jt = json::array();
    for (const auto& t : triples)
        jt.push_back(json{{"ray_triple", json::array({t.indices[0], t.indices[1], t.indices[2]})},
                          {"fake_plane", io::to_json(t.plane)}});

    Report r;
    r.data = detail::envelope("fan-check", &doc);
    r.data["results"] = json{{"valid", true},
                             {"ray_count", fan.size()},
                             {"smoothness", io::to_json(smooth)},
                             {"class_group", io::to_json(group)},
                             {"opposite_pairs", jp},
                             {"zero_sum_triples", jt}};

    std::ostringstream os;
    os << "fan: " << fan.size() << " rays: " << detail::join_vectors(fan.rays()) << "\n";
    os << "smooth: " << (smooth.smooth ? "yes" : "no") << ", cone indices " << detail::join_integers(smooth.cone_indices)
       << "\n";
    os << "class group: rank " << group.rank << ", torsion [" << detail::join_integers(group.torsion) << "]\n";
    os << "opposite ray pairs: " << pairs.size() << "\n";
    for (const auto& [i, j] : pairs)
        os << "  " << to_string(fan.ray(i)) << " " << to_string(fan.ray(j)) << "\n";
    os << "zero-sum triples: " << triples.size() << "\n";
    for (const auto& t : triples)
        os << "  " << detail::join_vectors({t.plane.rays.begin(), t.plane.rays.end()})
           << (t.plane.is_projective_plane ? "  (P2)" : "  (singular, index " + t.plane.cone_indices[0].str() + ")")
           << "\n";
    r.text = os.str();
    return r;
}

inline Report cmd_degree(const io::InputDocument& doc, bool assume_integral = true) {
    const Fan& fan = doc.fan;
    const LaurentCurve& curve = detail::require_curve(doc, "degree");
    auto intersections = boundary_intersections(fan, curve);
    Integer total = anticanonical_pairing(fan, intersections);
    auto poly = circumscribed_polygon(fan, curve);
    auto newton = newton_polygon(curve);

    json charts = json::array();
    std::vector<ChartDecomposition> decomps;
    for (std::size_t i = 0; i < fan.size(); ++i) {
        decomps.push_back(chart_decomposition(fan, curve, i));
        const auto& d = decomps.back();
        charts.push_back(json{{"a", io::to_json(d.a)}, {"b", io::to_json(d.b)}, {"c", io::to_json(d.c)}});
    }
    json nv = json::array();
    for (const auto& v : newton.vertices())
        nv.push_back(io::to_json(v));

    Report r;
    r.data = detail::envelope("degree", &doc);
    r.data["results"] = json{{"intersections", io::integer_array(intersections)},
                             {"anticanonical_degree", io::to_json(total)},
                             {"arithmetic_genus", io::to_json(arithmetic_genus(curve))},
                             {"newton_polygon", json{{"kind", std::string(to_string(newton.kind()))}, {"vertices", nv}}},
                             {"circumscribed_polygon", io::to_json(poly)},
                             {"chart_decomposition", charts}};
    r.data["diagnostics"] = json{{"assume_integral", assume_integral}};

    std::ostringstream os;
    os << "ray               line            mu_{i-1} -> mu_i        nu-      nu+      C.D_i  (a,b,c)\n";
    for (std::size_t i = 0; i < fan.size(); ++i) {
        const auto& e = poly.edges[i];
        const auto& l = poly.lines[i].line;
        os << "  " << to_string(fan.ray(i)) << "  <m," << to_string(l.normal()) << "> = " << l.level() << "  "
           << to_string(e.from) << " -> " << to_string(e.to) << "  " << to_string(e.nu_minus) << "  "
           << to_string(e.nu_plus) << "  " << intersections[i] << "  (" << decomps[i].a << "," << decomps[i].b << ","
           << decomps[i].c << ")\n";
    }
    os << "anti-canonical degree: " << total << "\n";
    os << "arithmetic genus: " << arithmetic_genus(curve) << "\n";
    r.text = os.str();
    return r;
}

inline Report cmd_classify(const io::InputDocument& doc, bool assume_integral = true) {
    const Fan& fan = doc.fan;
    const LaurentCurve& curve = detail::require_curve(doc, "classify");
    Classification c = classify(fan, curve);
    WitnessScan scan = line_witness_scan(fan, curve);
    auto notes = orientation_notes(fan, curve);

    json jn = json::array();
    for (const auto& n : notes)
        jn.push_back(json{{"ray_triple", json::array({n.ray_triple[0], n.ray_triple[1], n.ray_triple[2]})},
                          {"witness_as_given", n.witness_as_given},
                          {"witness_negated", n.witness_negated}});

    Report r;
    r.data = detail::envelope("classify", &doc);
    r.data["results"] = json{{"classification", io::to_json(c)}, {"witnesses", io::to_json(scan)}};
    r.data["diagnostics"] = json{{"assume_integral", assume_integral}, {"orientation_notes", jn}};

    std::ostringstream os;
    os << detail::describe(fan, c);
    os << "witnesses: " << scan.pairs.size() << " projection(s), " << scan.triples.size() << " fake plane(s)\n";
    for (const auto& p : scan.pairs)
        os << "  projection along " << to_string(p.contracted_direction) << "\n";
    for (const auto& t : scan.triples)
        os << "  fake plane " << detail::join_vectors({t.fake_plane.rays.begin(), t.fake_plane.rays.end()})
           << (t.fake_plane.is_projective_plane ? " (P2)" : " (singular)") << "\n";
    for (const auto& n : notes) {
        os << "note: singular triple " << to_string(fan.ray(n.ray_triple[0])) << " " << to_string(fan.ray(n.ray_triple[1]))
           << " " << to_string(fan.ray(n.ray_triple[2])) << " is " << (n.witness_as_given ? "" : "not ")
           << "a witness, its negation is " << (n.witness_negated ? "one" : "not") << "\n";
    }
    r.text = os.str();
    return r;
}

inline Report cmd_verdict(const io::InputDocument& doc, const Overrides& o = {}) {
    auto genus = o.genus ? o.genus : doc.genus;
    auto cover = o.cover_degree ? o.cover_degree : doc.cover_degree;
    int image_genus = o.image_genus ? *o.image_genus : doc.image_genus.value_or(0);
    if (!genus || !cover)
        throw ParseError("verdict: genus and cover degree are required");
    const LaurentCurve& curve = detail::require_curve(doc, "verdict");
    Verdict v = bn_verdict(*genus, *cover, doc.fan, curve, image_genus);

    Report r;
    r.data = detail::envelope("verdict", &doc);
    r.data["results"] = json{{"verdict", io::to_json(v)}};
    r.data["diagnostics"] = json{{"assume_integral", o.assume_integral}};

    std::ostringstream os;
    os << "verdict: " << v.tag() << "\n";
    os << "  genus " << v.genus << ", cover degree " << v.cover_degree << ", image degree " << v.image_degree
       << ", image genus " << v.image_genus << "\n";
    os << "  expected dimension " << v.image_degree << "*" << v.cover_degree << " + 2(1 - " << v.genus
       << ") = " << v.expected_dim << "\n";
    std::visit(
        [&](const auto& out) {
            using T = std::decay_t<decltype(out)>;
            if constexpr (std::is_same_v<T, NoSuchCovers>)
                os << "  " << out.reason << "\n";
            else if constexpr (std::is_same_v<T, ObstructedComponent>)
                os << "  family dimension " << out.family_dim << ", excess " << out.excess << "\n";
            else if constexpr (std::is_same_v<T, BoundarySpecialCase> || std::is_same_v<T, NotAComponent>)
                os << "  family dimension " << out.family_dim << "\n";
        },
        v.outcome);
    if (const auto* w = std::get_if<ObstructedComponent>(&v.outcome); w && w->witness)
        os << detail::describe(doc.fan, *w->witness);
    if (const auto* w = std::get_if<LowDegreeBirational>(&v.outcome); w && w->witness)
        os << detail::describe(doc.fan, *w->witness);
    r.text = os.str();
    return r;
}

/// `dims <formula> <ints...>`; formulas: rho, maps-projective, maps-surface,
/// severi, farkas, excess, verdict.
inline Report cmd_dims(const std::vector<std::string>& args, int image_genus = 0) {
    if (args.empty())
        throw ParseError("dims: missing formula name");
    const std::string& name = args[0];
    std::vector<std::int64_t> v;
    for (std::size_t i = 1; i < args.size(); ++i)
        v.push_back(io::int64_from_json(json(args[i]), "dims argument " + std::to_string(i)));
    auto arity = [&](std::size_t n, const char* usage) {
        if (v.size() != n)
            throw ParseError(std::string("dims ") + name + ": expected " + usage);
    };

    Report r;
    r.data = detail::envelope("dims", nullptr);
    json args_json = json::array();
    for (auto x : v)
        args_json.push_back(x);
    r.data["input"] = json{{"formula", name}, {"args", args_json}};

    std::int64_t value = 0;
    if (name == "rho") {
        arity(3, "g r d");
        value = rho(v[0], v[1], v[2]);
    } else if (name == "maps-projective") {
        arity(3, "g r d");
        value = expected_dim_maps_projective(v[0], v[1], v[2]);
    } else if (name == "maps-surface") {
        arity(2, "g deg");
        value = expected_dim_maps_surface(v[0], v[1]);
    } else if (name == "severi") {
        arity(2, "g deg");
        value = severi_dim(v[0], v[1]);
    } else if (name == "farkas") {
        arity(3, "g r deg");
        value = farkas_expected_dim(v[0], v[1], v[2]);
    } else if (name == "excess") {
        arity(3, "g m deg");
        value = multiple_cover_excess(v[0], v[1], v[2]);
    } else if (name == "verdict") {
        arity(3, "g m deg");
        Verdict verdict = bn_verdict(v[0], v[1], v[2], image_genus);
        r.data["input"]["image_genus"] = image_genus;
        r.data["results"] = json{{"verdict", io::to_json(verdict)}};
        r.text = "verdict: " + std::string(verdict.tag()) + " (expected dimension " +
                 std::to_string(verdict.expected_dim) + ")\n";
        if (const auto* o = std::get_if<ObstructedComponent>(&verdict.outcome))
            r.text += "  family dimension " + std::to_string(o->family_dim) + ", excess " + std::to_string(o->excess) + "\n";
        else if (const auto* b = std::get_if<BoundarySpecialCase>(&verdict.outcome))
            r.text += "  family dimension " + std::to_string(b->family_dim) + "\n";
        else if (const auto* n = std::get_if<NotAComponent>(&verdict.outcome))
            r.text += "  family dimension " + std::to_string(n->family_dim) + "\n";
        else if (const auto* s = std::get_if<NoSuchCovers>(&verdict.outcome))
            r.text += "  " + s->reason + "\n";
        return r;
    } else {
        throw ParseError("dims: unknown formula \"" + name + "\"");
    }
    r.data["results"] = json{{"value", value}};
    r.text = name + " = " + std::to_string(value) + "\n";
    return r;
}

enum class RenderTarget { Fan, Polygons };

inline Report cmd_render(const io::InputDocument& doc, RenderTarget target, const std::string& out_path) {
    std::string svg_text = target == RenderTarget::Fan
                               ? svg::render_fan(doc.fan)
                               : svg::render_polygons(doc.fan, detail::require_curve(doc, "render polygons"));
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw IoError("cannot open " + out_path + " for writing");
    out << svg_text;
    out.close();
    if (!out)
        throw IoError("failed writing " + out_path);

    Report r;
    r.data = detail::envelope("render", &doc);
    r.data["results"] = json{{"target", target == RenderTarget::Fan ? "fan" : "polygons"},
                             {"path", out_path},
                             {"bytes", svg_text.size()}};
    r.text = "wrote " + out_path + " (" + std::to_string(svg_text.size()) + " bytes)\n";
    return r;
}

} // namespace toricbn::report
