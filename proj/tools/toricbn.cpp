// toricbn: command-line front end.
//
// Exit codes: 0 success, 1 parse/usage error, 2 domain validation failure,
// 3 I/O failure.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toricbn/report.hpp"

namespace {

using toricbn::report::Report;
using nlohmann::json;

enum ExitCode { kOk = 0, kParse = 1, kValidation = 2, kIo = 3 };

std::string read_input(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw toricbn::report::IoError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

toricbn::io::InputDocument load(const std::string& path) {
    std::string text = read_input(path);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw toricbn::ParseError(std::string("invalid JSON: ") + e.what());
    }
    return toricbn::io::document_from_json(j);
}

void emit(const Report& r, bool as_json) {
    if (as_json)
        std::cout << r.data.dump(2) << '\n';
    else
        std::cout << r.text;
}

int fail(bool as_json, const std::string& kind, const std::string& message, int code) {
    if (as_json)
        std::cout << json{{"error", {{"kind", kind}, {"message", message}}}}.dump(2) << '\n';
    std::cerr << "error: " << message << '\n';
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Brill-Noether combinatorics of curves on toric surfaces"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    bool assume_integral = true;
    std::string input = "-";
    std::string out_path;
    std::string target = "fan";
    std::optional<std::int64_t> genus, cover_degree;
    std::optional<int> image_genus;
    std::vector<std::string> dims_args;

    app.add_flag("--json", as_json, "Emit canonical JSON");
    app.add_flag("--assume-integral,!--no-assume-integral", assume_integral,
                 "Acknowledge that the input curve is integral and not a boundary component (default on)");

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "JSON document (default: standard input)");
    };

    auto* fan_check = app.add_subcommand("fan-check", "Validate a fan and report smoothness, class group, pairs and triples");
    add_input(fan_check);
    auto* degree = app.add_subcommand("degree", "Boundary intersection numbers and anti-canonical degree");
    add_input(degree);
    auto* classify = app.add_subcommand("classify", "Low-degree classification with contraction witnesses");
    add_input(classify);
    auto* verdict = app.add_subcommand("verdict", "Expected-dimension verdict for multiple covers");
    add_input(verdict);
    verdict->add_option("--genus", genus, "Genus of the source curve");
    verdict->add_option("--cover-degree", cover_degree, "Degree of the cover onto the image");
    verdict->add_option("--image-genus", image_genus, "Geometric genus branch of the image (0 or 1)")
        ->check(CLI::IsMember({0, 1}));
    auto* dims = app.add_subcommand("dims", "Evaluate a dimension formula: rho, maps-projective, maps-surface, "
                                            "severi, farkas, excess, verdict");
    dims->add_option("args", dims_args, "Formula name followed by integer arguments")->required();
    dims->add_option("--image-genus", image_genus, "Image genus branch for `dims verdict`")
        ->check(CLI::IsMember({0, 1}));
    auto* render = app.add_subcommand("render", "Write an SVG diagram of the fan or of the polygons");
    add_input(render);
    render->add_option("--target", target, "fan | polygons")->check(CLI::IsMember({"fan", "polygons"}));
    render->add_option("--out", out_path, "Output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        Report r;
        if (fan_check->parsed()) {
            r = toricbn::report::cmd_fan_check(load(input));
        } else if (degree->parsed()) {
            r = toricbn::report::cmd_degree(load(input), assume_integral);
        } else if (classify->parsed()) {
            r = toricbn::report::cmd_classify(load(input), assume_integral);
        } else if (verdict->parsed()) {
            toricbn::report::Overrides o{genus, cover_degree, image_genus, assume_integral};
            r = toricbn::report::cmd_verdict(load(input), o);
        } else if (dims->parsed()) {
            r = toricbn::report::cmd_dims(dims_args, image_genus.value_or(0));
        } else if (render->parsed()) {
            auto t = target == "fan" ? toricbn::report::RenderTarget::Fan : toricbn::report::RenderTarget::Polygons;
            r = toricbn::report::cmd_render(load(input), t, out_path);
        }
        emit(r, as_json);
        return kOk;
    } catch (const toricbn::ParseError& e) {
        return fail(as_json, "ParseError", e.what(), kParse);
    } catch (const toricbn::Error& e) {
        return fail(as_json, std::string(toricbn::to_string(e.kind())), e.what(), kValidation);
    } catch (const toricbn::report::IoError& e) {
        return fail(as_json, "IoError", e.what(), kIo);
    }
}
