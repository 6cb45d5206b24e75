#pragma once

// Curves in the torus given by Laurent polynomials, their Newton polygons and
// the circumscribed polygon cut out by the support lines of a fan. Boundary
// intersection numbers are lattice lengths of the circumscribed polygon's edges.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "toricbn/fan.hpp"
#include "toricbn/lattice.hpp"

namespace toricbn {

/// F = sum a_m x^m over finitely many exponents m with a_m != 0.
class LaurentCurve {
public:
    using Terms = std::map<LatticeVector, Rational>;

    explicit LaurentCurve(Terms terms) : terms_(std::move(terms)) {
        for (const auto& [m, a] : terms_)
            if (a == 0)
                throw Error(ErrorKind::ZeroCoefficient, "zero coefficient stored for exponent " + to_string(m));
        if (terms_.size() < 2)
            throw Error(ErrorKind::TooFewTerms, "a curve needs at least two monomials");
    }

    /// Unit coefficients on the given exponents.
    static LaurentCurve from_support(std::span<const LatticeVector> exponents) {
        Terms t;
        for (const auto& m : exponents)
            if (!t.emplace(m, Rational(1)).second)
                throw Error(ErrorKind::DomainViolation, "duplicate exponent " + to_string(m));
        return LaurentCurve(std::move(t));
    }

    static LaurentCurve from_support(std::initializer_list<LatticeVector> exponents) {
        return from_support(std::span<const LatticeVector>(exponents.begin(), exponents.size()));
    }

    const Terms& terms() const { return terms_; }

    friend bool operator==(const LaurentCurve& a, const LaurentCurve& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

/// Exponent set, in lexicographic order.
inline std::vector<LatticeVector> support(const LaurentCurve& curve) {
    std::vector<LatticeVector> out;
    out.reserve(curve.terms().size());
    for (const auto& [m, a] : curve.terms())
        out.push_back(m);
    return out;
}

inline LatticePolygon newton_polygon(const LaurentCurve& curve) {
    auto pts = support(curve);
    return convex_hull(pts);
}

/// Multiplication by the monomial x^shift.
inline LaurentCurve translated(const LaurentCurve& curve, const LatticeVector& shift) {
    LaurentCurve::Terms t;
    for (const auto& [m, a] : curve.terms())
        t.emplace(m + shift, a);
    return LaurentCurve(std::move(t));
}

inline Integer arithmetic_genus(const LaurentCurve& curve) {
    return interior_lattice_points(newton_polygon(curve));
}

struct SupportLine {
    Line line;
    Integer min_value;
    std::vector<LatticeVector> argmin;
};

/// The line of the given normal direction touching the support from the side
/// where the pairing is minimal.
inline SupportLine support_line(const LaurentCurve& curve, const LatticeVector& ray) {
    std::optional<Integer> best;
    std::vector<LatticeVector> argmin;
    for (const auto& [m, a] : curve.terms()) {
        Integer v = pairing(m, ray);
        if (!best || v < *best) {
            best = v;
            argmin.clear();
        }
        if (v == *best)
            argmin.push_back(m);
    }
    return {Line(ray, *best), *best, std::move(argmin)};
}

inline std::vector<SupportLine> support_lines(const Fan& fan, const LaurentCurve& curve) {
    std::vector<SupportLine> out;
    out.reserve(fan.size());
    for (const auto& r : fan.rays())
        out.push_back(support_line(curve, r));
    return out;
}

/// Edge e_i on the support line of ray i, directed from mu_{i-1} to mu_i.
struct EdgeRecord {
    std::size_t ray_index = 0;
    RationalPoint from;
    RationalPoint to;
    LatticeVector nu_minus; // contact closest to `from`
    LatticeVector nu_plus;  // contact closest to `to`
    std::vector<LatticeVector> contacts;
    std::optional<Integer> delta; // only when both endpoints are lattice points
};

struct CircumscribedPolygon {
    std::vector<SupportLine> lines;
    std::vector<RationalPoint> mu; // mu[i] = line i meets line i+1
    std::vector<EdgeRecord> edges;

    bool all_lattice() const {
        for (const auto& p : mu)
            if (!p.is_lattice())
                return false;
        return true;
    }

    std::size_t distinct_vertices() const {
        std::size_t n = 0;
        for (std::size_t i = 0; i < mu.size(); ++i)
            if (!(mu[i] == mu[(i + mu.size() - 1) % mu.size()]))
                ++n;
        return n == 0 ? 1 : n;
    }
};

inline CircumscribedPolygon circumscribed_polygon(const Fan& fan, const LaurentCurve& curve) {
    CircumscribedPolygon poly;
    poly.lines = support_lines(fan, curve);
    const std::size_t c = fan.size();
    poly.mu.reserve(c);
    for (std::size_t i = 0; i < c; ++i)
        poly.mu.push_back(line_intersection(poly.lines[i].line, poly.lines[(i + 1) % c].line));

    for (std::size_t i = 0; i < c; ++i) {
        EdgeRecord e;
        e.ray_index = i;
        e.from = poly.mu[(i + c - 1) % c];
        e.to = poly.mu[i];
        e.contacts = poly.lines[i].argmin;

        Rational wx = e.to.x - e.from.x;
        Rational wy = e.to.y - e.from.y;
        Rational len2 = wx * wx + wy * wy;
        std::optional<Rational> tmin, tmax;
        for (const auto& p : e.contacts) {
            Rational t = (Rational(p.x) - e.from.x) * wx + (Rational(p.y) - e.from.y) * wy;
            bool on_edge = len2 == 0 ? RationalPoint(p) == e.to : (t >= 0 && t <= len2);
            if (!on_edge)
                throw Error(ErrorKind::InternalContradiction,
                            "support contact " + to_string(p) + " lies off edge " + std::to_string(i));
            if (!tmin || t < *tmin) {
                tmin = t;
                e.nu_minus = p;
            }
            if (!tmax || t > *tmax) {
                tmax = t;
                e.nu_plus = p;
            }
        }
        if (e.from.is_lattice() && e.to.is_lattice())
            e.delta = lattice_distance(e.from.lattice(), e.to.lattice());
        poly.edges.push_back(std::move(e));
    }
    return poly;
}

namespace detail {

inline void require_smooth(const Fan& fan) {
    auto report = smoothness(fan);
    if (!report.smooth)
        throw Error(ErrorKind::SingularFan, "intersection numbers need a smooth fan");
}

} // namespace detail

/// C . D_i for every ray i.
inline std::vector<Integer> boundary_intersections(const Fan& fan, const LaurentCurve& curve) {
    detail::require_smooth(fan);
    auto poly = circumscribed_polygon(fan, curve);
    std::vector<Integer> out;
    out.reserve(fan.size());
    for (const auto& e : poly.edges) {
        if (!e.delta)
            throw Error(ErrorKind::InternalContradiction, "non-lattice vertex on a smooth fan");
        out.push_back(*e.delta);
    }
    return out;
}

inline Integer anticanonical_degree(const Fan& fan, const LaurentCurve& curve) {
    auto v = boundary_intersections(fan, curve);
    return anticanonical_pairing(fan, v);
}

/// The three chart-local counts for ray i; a + b - c equals C . D_i.
struct ChartDecomposition {
    Integer a; // delta(nu_minus, mu_i)
    Integer b; // delta(mu_{i-1}, nu_plus)
    Integer c; // delta(nu_minus, nu_plus)

    Integer total() const { return a + b - c; }
};

inline ChartDecomposition chart_decomposition(const Fan& fan, const LaurentCurve& curve, std::size_t ray_index) {
    detail::require_smooth(fan);
    if (ray_index >= fan.size())
        throw Error(ErrorKind::IndexOutOfRange, "ray index " + std::to_string(ray_index) + " out of range");
    auto poly = circumscribed_polygon(fan, curve);
    const auto& e = poly.edges[ray_index];
    ChartDecomposition d{lattice_distance(e.nu_minus, e.to.lattice()),
                         lattice_distance(e.from.lattice(), e.nu_plus),
                         lattice_distance(e.nu_minus, e.nu_plus)};
    if (d.total() != *e.delta)
        throw Error(ErrorKind::InternalContradiction, "chart decomposition does not add up on ray " +
                                                          std::to_string(ray_index));
    return d;
}

/// True when <m, ray> is constant on the support, i.e. the curve lies in a
/// fibre of the projection killing `ray`.
inline bool is_contracted_by_projection(const LaurentCurve& curve, const LatticeVector& ray) {
    if (!ray.is_primitive())
        throw Error(ErrorKind::NonPrimitiveRay, "ray " + to_string(ray) + " is not primitive");
    const auto& terms = curve.terms();
    Integer first = pairing(terms.begin()->first, ray);
    for (const auto& [m, a] : terms)
        if (pairing(m, ray) != first)
            return false;
    return true;
}

enum class Evaluation { Value, Dx, Dy };

namespace detail {

inline Rational rational_pow(const Rational& base, const Integer& exponent) {
    if (abs(exponent) > 1'000'000)
        throw Error(ErrorKind::DomainViolation, "exponent too large to evaluate");
    long long e = exponent.convert_to<long long>();
    Rational b = e < 0 ? Rational(1) / base : base;
    unsigned long long k = static_cast<unsigned long long>(e < 0 ? -e : e);
    Rational result(1);
    while (k) {
        if (k & 1)
            result *= b;
        b *= b;
        k >>= 1;
    }
    return result;
}

} // namespace detail

inline Rational evaluate(const LaurentCurve& curve, const RationalPoint& point, Evaluation what = Evaluation::Value) {
    if (point.x == 0 || point.y == 0)
        throw Error(ErrorKind::ZeroCoordinate, "Laurent polynomials are evaluated in the torus");
    Rational sum = 0;
    for (const auto& [m, a] : curve.terms()) {
        switch (what) {
        case Evaluation::Value:
            sum += a * detail::rational_pow(point.x, m.x) * detail::rational_pow(point.y, m.y);
            break;
        case Evaluation::Dx:
            if (m.x != 0)
                sum += a * Rational(m.x) * detail::rational_pow(point.x, m.x - 1) * detail::rational_pow(point.y, m.y);
            break;
        case Evaluation::Dy:
            if (m.y != 0)
                sum += a * Rational(m.y) * detail::rational_pow(point.x, m.x) * detail::rational_pow(point.y, m.y - 1);
            break;
        }
    }
    return sum;
}

inline bool is_singular_at(const LaurentCurve& curve, const RationalPoint& point) {
    return evaluate(curve, point, Evaluation::Value) == 0 && evaluate(curve, point, Evaluation::Dx) == 0 &&
           evaluate(curve, point, Evaluation::Dy) == 0;
}

} // namespace toricbn
