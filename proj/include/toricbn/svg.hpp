#pragma once

// Hand-written SVG diagrams of fans and of the Newton / circumscribed
// polygons. Output depends only on the exact input values.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "toricbn/fan.hpp"
#include "toricbn/newton.hpp"

namespace toricbn::svg {

inline constexpr int unit_px = 40;

namespace detail {

// Exact decimal with three fractional digits, rounded half up.
inline std::string fixed3(const Rational& v) {
    Integer scaled = numerator(v) * 1000 * 2 + denominator(v);
    Integer q = floor_div(scaled, Integer(2 * denominator(v)));
    bool neg = q < 0;
    Integer a = neg ? Integer(-q) : q;
    Integer whole = a / 1000;
    Integer frac = a % 1000;
    std::string f = frac.str();
    while (f.size() < 3)
        f.insert(f.begin(), '0');
    while (!f.empty() && f.back() == '0')
        f.pop_back();
    std::string out = (neg ? "-" : "") + whole.str();
    if (!f.empty())
        out += "." + f;
    return out;
}

inline Integer floor_of(const Rational& v) { return floor_div(numerator(v), denominator(v)); }

inline Integer ceil_of(const Rational& v) { return -floor_div(Integer(-numerator(v)), denominator(v)); }

/// Lattice bounding box with a one-unit margin (three on the right, for
/// labels), mapped to pixels with y up.
struct Canvas {
    Integer xmin, xmax, ymin, ymax;

    void include(const RationalPoint& p) {
        Integer lo_x = floor_of(p.x), hi_x = ceil_of(p.x);
        Integer lo_y = floor_of(p.y), hi_y = ceil_of(p.y);
        if (lo_x < xmin) xmin = lo_x;
        if (hi_x > xmax) xmax = hi_x;
        if (lo_y < ymin) ymin = lo_y;
        if (hi_y > ymax) ymax = hi_y;
    }

    std::string px(const Rational& x) const { return fixed3((x - Rational(xmin) + 1) * unit_px); }
    std::string py(const Rational& y) const { return fixed3((Rational(ymax) - y + 1) * unit_px); }
    Integer width() const { return (xmax - xmin + 4) * unit_px; }
    Integer height() const { return (ymax - ymin + 2) * unit_px; }

    std::string header() const {
        std::ostringstream os;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width() << "\" height=\"" << height()
           << "\" viewBox=\"0 0 " << width() << ' ' << height() << "\">\n";
        os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        return os.str();
    }

    std::string lattice_dots() const {
        std::ostringstream os;
        os << "<g fill=\"#bbbbbb\">\n";
        for (Integer y = ymax; y >= ymin; --y)
            for (Integer x = xmin; x <= xmax; ++x)
                os << "<circle cx=\"" << px(Rational(x)) << "\" cy=\"" << py(Rational(y)) << "\" r=\"1.5\"/>\n";
        os << "</g>\n";
        return os.str();
    }
};

inline Canvas canvas_around(const std::vector<RationalPoint>& pts) {
    Canvas c{0, 0, 0, 0};
    bool first = true;
    for (const auto& p : pts) {
        if (first) {
            c.xmin = c.xmax = floor_of(p.x);
            c.ymin = c.ymax = floor_of(p.y);
            first = false;
        }
        c.include(p);
    }
    return c;
}

} // namespace detail

/// Rays as arrows from the origin, labelled with their coordinates.
inline std::string render_fan(const Fan& fan) {
    std::vector<RationalPoint> pts{RationalPoint(Rational(0), Rational(0))};
    for (const auto& r : fan.rays())
        pts.emplace_back(r);
    auto canvas = detail::canvas_around(pts);

    std::ostringstream os;
    os << canvas.header();
    os << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
          "markerHeight=\"6\" orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"black\"/>"
          "</marker></defs>\n";
    os << canvas.lattice_dots();
    const Rational zero(0);
    os << "<g stroke=\"black\" stroke-width=\"3\" marker-end=\"url(#arrow)\">\n";
    for (const auto& r : fan.rays())
        os << "<line x1=\"" << canvas.px(zero) << "\" y1=\"" << canvas.py(zero) << "\" x2=\""
           << canvas.px(Rational(r.x)) << "\" y2=\"" << canvas.py(Rational(r.y)) << "\"/>\n";
    os << "</g>\n<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t i = 0; i < fan.size(); ++i) {
        const auto& r = fan.ray(i);
        os << "<text x=\"" << canvas.px(Rational(r.x)) << "\" y=\"" << canvas.py(Rational(r.y) + Rational(1, 4))
           << "\" text-anchor=\"middle\">n" << i << " " << to_string(r) << "</text>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

/// Support points, the Newton polygon (filled) and the circumscribed polygon
/// (thick outline) with its vertices labelled.
inline std::string render_polygons(const Fan& fan, const LaurentCurve& curve) {
    auto poly = circumscribed_polygon(fan, curve);
    auto newton = newton_polygon(curve);
    auto supp = support(curve);

    std::vector<RationalPoint> pts;
    for (const auto& m : supp)
        pts.emplace_back(m);
    for (const auto& m : poly.mu)
        pts.push_back(m);
    auto canvas = detail::canvas_around(pts);

    std::ostringstream os;
    os << canvas.header();
    os << canvas.lattice_dots();

    auto point_list = [&](const std::vector<RationalPoint>& ps) {
        std::string s;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            if (i)
                s += ' ';
            s += canvas.px(ps[i].x) + "," + canvas.py(ps[i].y);
        }
        return s;
    };

    std::vector<RationalPoint> nv;
    for (const auto& v : newton.vertices())
        nv.emplace_back(v);
    os << "<polygon points=\"" << point_list(nv)
       << "\" fill=\"#1f77b4\" fill-opacity=\"0.2\" stroke=\"#1f77b4\" stroke-width=\"2\"/>\n";

    std::vector<RationalPoint> outline;
    for (const auto& m : poly.mu)
        if (outline.empty() || !(outline.back() == m))
            outline.push_back(m);
    if (outline.size() > 1 && outline.front() == outline.back())
        outline.pop_back();
    os << "<polygon points=\"" << point_list(outline) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"4\"/>\n";

    os << "<g fill=\"black\">\n";
    for (const auto& m : supp)
        os << "<circle cx=\"" << canvas.px(Rational(m.x)) << "\" cy=\"" << canvas.py(Rational(m.y))
           << "\" r=\"5\"/>\n";
    os << "</g>\n<g font-family=\"sans-serif\" font-size=\"12\">\n";

    // one label per distinct vertex, listing every index that lands there
    std::vector<std::pair<RationalPoint, std::string>> labels;
    for (std::size_t i = 0; i < poly.mu.size(); ++i) {
        std::string name = "μ" + std::to_string(i);
        auto it = std::find_if(labels.begin(), labels.end(), [&](const auto& l) { return l.first == poly.mu[i]; });
        if (it == labels.end())
            labels.emplace_back(poly.mu[i], name);
        else
            it->second += "=" + name;
    }
    for (const auto& [p, name] : labels)
        os << "<text x=\"" << canvas.px(p.x + Rational(1, 8)) << "\" y=\"" << canvas.py(p.y + Rational(1, 8))
           << "\">" << name << " " << to_string(p) << "</text>\n";
    os << "</g>\n</svg>\n";
    return os.str();
}

} // namespace toricbn::svg
