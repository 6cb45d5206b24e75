#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "toricbn/report.hpp"

using namespace toricbn;
using nlohmann::json;

namespace {

io::InputDocument doc_of(const char* text) { return io::document_from_json(json::parse(text)); }

int count(const std::string& hay, const std::string& needle) {
    int n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1))
        ++n;
    return n;
}

} // namespace

TEST(Json, IntegersAndVectors) {
    EXPECT_EQ(io::to_json(Integer(-7)), json(-7));
    Integer big("123456789012345678901234567890");
    EXPECT_EQ(io::to_json(big), json("123456789012345678901234567890"));
    EXPECT_EQ(io::integer_from_json(json("123456789012345678901234567890"), "x"), big);
    EXPECT_EQ(io::integer_from_json(json(-3), "x"), -3);
    EXPECT_THROW(io::integer_from_json(json(1.5), "x"), ParseError);
    EXPECT_THROW(io::integer_from_json(json("12a"), "x"), ParseError);
    EXPECT_EQ(io::vector_from_json(json::parse("[2, -1]"), "v"), LatticeVector(2, -1));
    EXPECT_THROW(io::vector_from_json(json::parse("[2]"), "v"), ParseError);
}

TEST(Json, Rationals) {
    EXPECT_EQ(io::rational_from_json(json("-3"), "c"), Rational(-3));
    EXPECT_EQ(io::rational_from_json(json("6/4"), "c"), Rational(3, 2));
    EXPECT_EQ(io::rational_from_json(json(5), "c"), Rational(5));
    EXPECT_THROW(io::rational_from_json(json("1/0"), "c"), ParseError);
    EXPECT_THROW(io::rational_from_json(json("1/-2"), "c"), ParseError);
    EXPECT_THROW(io::rational_from_json(json(0.5), "c"), ParseError);
    EXPECT_EQ(to_string(Rational(-3, 2)), "-3/2");
    EXPECT_EQ(to_string(Rational(4)), "4");
}

TEST(Json, FanPresets) {
    EXPECT_EQ(io::fan_from_json(json::parse(R"({"preset": "P2"})")), preset_p2());
    EXPECT_EQ(io::fan_from_json(json::parse(R"({"preset": "P1xP1"})")), preset_p1xp1());
    EXPECT_EQ(io::fan_from_json(json::parse(R"({"preset": "Bl3P2"})")), preset_bl3p2());
    EXPECT_EQ(io::fan_from_json(json::parse(R"({"preset": "Hirzebruch", "a": 2})")), preset_hirzebruch(2));
    EXPECT_EQ(io::fan_from_json(json::parse(R"({"preset": "FakePlane", "n1": [2, -1], "n2": [-1, 2]})")),
              preset_fake_plane({2, -1}, {-1, 2}));
    EXPECT_THROW(io::fan_from_json(json::parse(R"({"preset": "P3"})")), ParseError);
    EXPECT_THROW(io::fan_from_json(json::parse(R"({"preset": "Hirzebruch"})")), ParseError);
    EXPECT_THROW(io::fan_from_json(json::parse(R"({"rays": 3})")), ParseError);
    EXPECT_THROW(io::fan_from_json(json::parse(R"({"rays": [[1, 0], [2, 0], [0, 1]]})")), Error);
}

TEST(Json, Curves) {
    auto c = io::curve_from_json(json::parse(R"({"terms": [{"exp": [0, 0]}, {"exp": [1, 2], "coeff": "-2/3"}]})"));
    EXPECT_EQ(c.terms().at(LatticeVector(0, 0)), 1);
    EXPECT_EQ(c.terms().at(LatticeVector(1, 2)), Rational(-2, 3));
    EXPECT_THROW(io::curve_from_json(json::parse(R"({"terms": [{"exp": [0, 0]}, {"exp": [0, 0]}]})")), ParseError);
    EXPECT_THROW(io::curve_from_json(json::parse(R"({"terms": [{"coeff": "1"}]})")), ParseError);
    EXPECT_THROW(io::curve_from_json(json::parse(R"({"terms": [{"exp": [0, 0]}]})")), Error);
    EXPECT_THROW(io::curve_from_json(json::parse(R"({"terms": [{"exp": [0, 0]}, {"exp": [1, 0], "coeff": "0"}]})")),
                 Error);
}

TEST(Json, DocumentSchemaBeforeValidation) {
    EXPECT_THROW(doc_of("[]"), ParseError);
    EXPECT_THROW(doc_of(R"({"curve": {"terms": []}})"), ParseError);
    EXPECT_THROW(doc_of(R"({"fan": {"preset": "P2"}, "image_genus_branch": 2})"), ParseError);
    // a schema error in the curve wins over an invalid fan
    EXPECT_THROW(doc_of(R"({"fan": {"rays": [[2, 0], [0, 1], [-1, -1]]}, "curve": 5})"), ParseError);
    auto d = doc_of(R"({"fan": {"preset": "P2"}, "genus": 3, "cover_degree": 2, "image_genus_branch": 1})");
    EXPECT_EQ(d.genus, 3);
    EXPECT_EQ(d.cover_degree, 2);
    EXPECT_EQ(d.image_genus, 1);
    EXPECT_FALSE(d.curve.has_value());
}

TEST(Json, DocumentRoundTrip) {
    const char* inputs[] = {
        R"({"fan": {"preset": "Bl3P2"}, "curve": {"terms": [{"exp": [1, 0]}, {"exp": [0, 1]}, {"exp": [1, 1]}]}})",
        R"({"fan": {"rays": [[0, -1], [1, 0], [-1, 2], [-1, 1], [1, -1], [2, -1], [0, 1], [-1, 0], [-1, -1]]},
            "curve": {"terms": [{"exp": [2, 1]}, {"exp": [1, 2]}, {"exp": [1, 1], "coeff": -3}, {"exp": [0, 0]}]},
            "genus": 1, "cover_degree": 2})",
        R"({"fan": {"preset": "FakePlane", "n1": [2, -1], "n2": [-1, 2]}})",
    };
    for (const char* text : inputs) {
        auto d = doc_of(text);
        json once = io::to_json(d);
        json twice = io::to_json(io::document_from_json(once));
        EXPECT_EQ(once, twice);
        EXPECT_EQ(once.dump(2), twice.dump(2));
    }
}

TEST(Report, EchoedInputReparses) {
    auto d = doc_of(R"({"fan": {"preset": "P2"}, "curve": {"terms": [{"exp": [0, 0]}, {"exp": [1, 0]},
                       {"exp": [0, 1]}, {"exp": [1, 1]}]}, "genus": 0, "cover_degree": 1})");
    for (const auto& r : {report::cmd_fan_check(d), report::cmd_degree(d), report::cmd_classify(d),
                          report::cmd_verdict(d)}) {
        auto again = io::document_from_json(r.data["input"]);
        EXPECT_EQ(io::to_json(again), io::to_json(d));
        EXPECT_EQ(again.fan, d.fan);
        EXPECT_EQ(again.curve, d.curve);
    }
}

TEST(Report, StableJsonAndMatchingText) {
    auto d = doc_of(R"({"fan": {"preset": "P2"}, "curve": {"terms": [{"exp": [0, 0]}, {"exp": [1, 0]},
                       {"exp": [0, 1]}, {"exp": [1, 1]}]}})");
    auto a = report::cmd_degree(d);
    auto b = report::cmd_degree(d);
    EXPECT_EQ(a.data.dump(2), b.data.dump(2));
    EXPECT_EQ(a.data["results"]["anticanonical_degree"], 6);
    EXPECT_EQ(a.data["results"]["intersections"], json::parse("[2, 2, 2]"));
    EXPECT_NE(a.text.find("anti-canonical degree: 6"), std::string::npos);

    auto c = report::cmd_classify(d);
    EXPECT_EQ(c.data["results"]["classification"]["tag"], "high_degree");
    EXPECT_EQ(c.data["results"]["classification"]["degree"], 6);
    EXPECT_NE(c.text.find("high_degree (degree 6)"), std::string::npos);
}

TEST(Report, FanCheck) {
    auto r = report::cmd_fan_check(doc_of(R"({"fan": {"preset": "Bl3P2"}})"));
    const auto& res = r.data["results"];
    EXPECT_EQ(res["ray_count"], 6);
    EXPECT_EQ(res["smoothness"]["smooth"], true);
    EXPECT_EQ(res["class_group"]["rank"], 4);
    EXPECT_EQ(res["opposite_pairs"].size(), 3u);
    EXPECT_GE(res["zero_sum_triples"].size(), 2u);

    auto f = report::cmd_fan_check(doc_of(R"({"fan": {"preset": "FakePlane", "n1": [2, -1], "n2": [-1, 2]}})"));
    EXPECT_EQ(f.data["results"]["smoothness"]["cone_indices"], json::parse("[3, 3, 3]"));
    EXPECT_EQ(f.data["results"]["class_group"]["torsion"], json::parse("[3]"));
}

TEST(Report, VerdictOverridesAndCurveRequirement) {
    auto d = doc_of(R"({"fan": {"preset": "Bl3P2"}, "curve": {"terms": [{"exp": [1, 0]}, {"exp": [0, 1]},
                       {"exp": [1, 1]}]}, "genus": 0, "cover_degree": 1})");
    EXPECT_EQ(report::cmd_verdict(d).data["results"]["verdict"]["tag"], "low_degree_birational");
    report::Overrides o;
    o.genus = 2;
    o.cover_degree = 2;
    auto v = report::cmd_verdict(d, o).data["results"]["verdict"];
    EXPECT_EQ(v["tag"], "obstructed_component");
    EXPECT_EQ(v["family_dim"], 5);
    EXPECT_EQ(v["witness"]["tag"], "maps_to_fake_plane");

    auto bare = doc_of(R"({"fan": {"preset": "P2"}})");
    EXPECT_THROW(report::cmd_degree(bare), ParseError);
    EXPECT_THROW(report::cmd_verdict(bare, o), ParseError);
}

TEST(Report, Dims) {
    EXPECT_EQ(report::cmd_dims({"rho", "2", "1", "2"}).data["results"]["value"], 0);
    EXPECT_EQ(report::cmd_dims({"maps-projective", "0", "2", "1"}).data["results"]["value"], 5);
    EXPECT_EQ(report::cmd_dims({"excess", "0", "2", "5"}).data["results"]["value"], -3);
    auto v = report::cmd_dims({"verdict", "1", "2", "5"}, 1).data["results"]["verdict"];
    EXPECT_EQ(v["tag"], "not_a_component");
    EXPECT_EQ(v["family_dim"], 5);
    EXPECT_EQ(v["expected_dim"], 10);
    EXPECT_THROW(report::cmd_dims({"rho", "2", "1"}), ParseError);
    EXPECT_THROW(report::cmd_dims({"nope"}), ParseError);
    EXPECT_THROW(report::cmd_dims({"rho", "x", "1", "2"}), ParseError);
    EXPECT_THROW(report::cmd_dims({"rho", "-1", "1", "2"}), Error);
}

TEST(Svg, FixedPointFormatting) {
    EXPECT_EQ(svg::detail::fixed3(Rational(40)), "40");
    EXPECT_EQ(svg::detail::fixed3(Rational(1, 3)), "0.333");
    EXPECT_EQ(svg::detail::fixed3(Rational(-1, 8)), "-0.125");
}

TEST(Svg, FanDiagrams) {
    auto bl = svg::render_fan(preset_bl3p2());
    EXPECT_EQ(bl, svg::render_fan(preset_bl3p2()));
    EXPECT_EQ(count(bl, "<line"), 6);
    EXPECT_NE(bl.find("(-1,-1)"), std::string::npos);

    auto nine = svg::render_fan(fixtures::nine_ray_fixed());
    EXPECT_EQ(count(nine, "<line"), 9);
    for (const char* label : {"(2,-1)", "(-1,2)", "(-1,-1)"})
        EXPECT_NE(nine.find(label), std::string::npos);
}

TEST(Svg, PolygonDiagram) {
    auto s = svg::render_polygons(preset_p2(), fixtures::square());
    EXPECT_EQ(s, svg::render_polygons(preset_p2(), fixtures::square()));
    EXPECT_EQ(count(s, "<polygon"), 2);
    // circumscribed triangle (0,0),(2,0),(0,2) and the unit square inside it
    EXPECT_NE(s.find("(2,0)"), std::string::npos);
    EXPECT_NE(s.find("(0,2)"), std::string::npos);
    EXPECT_EQ(count(s, "r=\"5\""), 4);
}

TEST(Svg, RenderWritesFile) {
    auto path = std::filesystem::temp_directory_path() / "toricbn_io_test.svg";
    auto r = report::cmd_render(doc_of(R"({"fan": {"preset": "P2"}})"), report::RenderTarget::Fan, path.string());
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_EQ(text, svg::render_fan(preset_p2()));
    EXPECT_EQ(r.data["results"]["bytes"], text.size());
    std::filesystem::remove(path);
    EXPECT_THROW(report::cmd_render(doc_of(R"({"fan": {"preset": "P2"}})"), report::RenderTarget::Fan,
                                    "/nonexistent-dir/x.svg"),
                 report::IoError);
}
