#pragma once

// Exact 2D lattice primitives: vectors in N and M, the evaluation pairing,
// lattice distance, convex hulls and lattice point counts.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "toricbn/error.hpp"

namespace toricbn {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// gcd of absolute values; gcd(0, 0) == 0.
inline Integer gcd(const Integer& a, const Integer& b) {
    Integer x = abs(a);
    Integer y = abs(b);
    while (y != 0) {
        Integer r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

/// Floor division for a positive divisor.
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline std::string to_string(const Integer& v) { return v.str(); }

/// Canonical "p/q" form; integers print without a denominator.
inline std::string to_string(const Rational& v) {
    if (denominator(v) == 1)
        return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

/// A point of Z^2. Used both for rays in N and for exponents in M.
struct LatticeVector {
    Integer x;
    Integer y;

    LatticeVector() = default;
    LatticeVector(Integer x_, Integer y_) : x(std::move(x_)), y(std::move(y_)) {}
    LatticeVector(std::int64_t x_, std::int64_t y_) : x(x_), y(y_) {}
    LatticeVector(int x_, int y_) : x(x_), y(y_) {}

    friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
    friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
        return {Integer(a.x + b.x), Integer(a.y + b.y)};
    }
    friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
        return {Integer(a.x - b.x), Integer(a.y - b.y)};
    }
    friend LatticeVector operator-(const LatticeVector& a) { return {Integer(-a.x), Integer(-a.y)}; }
    friend LatticeVector operator*(const Integer& k, const LatticeVector& a) {
        return {Integer(k * a.x), Integer(k * a.y)};
    }

    bool is_zero() const { return x == 0 && y == 0; }
    bool is_primitive() const { return gcd(x, y) == 1; }

    friend std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
        return os << '(' << v.x << ',' << v.y << ')';
    }
};

inline std::string to_string(const LatticeVector& v) {
    return "(" + v.x.str() + "," + v.y.str() + ")";
}

inline Integer det2(const LatticeVector& u, const LatticeVector& v) { return u.x * v.y - u.y * v.x; }

/// The evaluation pairing M x N -> Z.
inline Integer pairing(const LatticeVector& m, const LatticeVector& n) { return m.x * n.x + m.y * n.y; }

/// Splits v = k * p with p primitive and k = gcd(|x|, |y|) > 0.
inline std::pair<LatticeVector, Integer> primitivize(const LatticeVector& v) {
    if (v.is_zero())
        throw Error(ErrorKind::ZeroVector, "cannot primitivize the zero vector");
    Integer k = gcd(v.x, v.y);
    return {LatticeVector(Integer(v.x / k), Integer(v.y / k)), k};
}

/// Number of lattice steps between a and b: 0 when equal, otherwise one more
/// than the number of lattice points strictly inside the segment.
inline Integer lattice_distance(const LatticeVector& a, const LatticeVector& b) {
    return gcd(a.x - b.x, a.y - b.y);
}

struct RationalPoint {
    Rational x;
    Rational y;

    RationalPoint() = default;
    RationalPoint(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}
    explicit RationalPoint(const LatticeVector& v) : x(v.x), y(v.y) {}

    friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
        return a.x == b.x && a.y == b.y;
    }

    bool is_lattice() const { return denominator(x) == 1 && denominator(y) == 1; }

    LatticeVector lattice() const {
        if (!is_lattice())
            throw Error(ErrorKind::DomainViolation, "point is not a lattice point");
        return {numerator(x), numerator(y)};
    }
};

inline std::string to_string(const RationalPoint& p) {
    return "(" + to_string(p.x) + "," + to_string(p.y) + ")";
}

/// The line { m : <m, normal> = level } in M.
class Line {
public:
    Line(LatticeVector normal, Integer level) : normal_(std::move(normal)), level_(std::move(level)) {
        if (!normal_.is_primitive())
            throw Error(ErrorKind::NonPrimitiveRay, "line normal must be primitive, got " + to_string(normal_));
    }

    const LatticeVector& normal() const { return normal_; }
    const Integer& level() const { return level_; }

    bool contains(const LatticeVector& m) const { return pairing(m, normal_) == level_; }
    bool contains(const RationalPoint& p) const { return p.x * normal_.x + p.y * normal_.y == level_; }

    friend bool operator==(const Line& a, const Line& b) {
        return a.normal_ == b.normal_ && a.level_ == b.level_;
    }

private:
    LatticeVector normal_;
    Integer level_;
};

/// Unique common point of two lines with non-collinear normals.
inline RationalPoint line_intersection(const Line& l1, const Line& l2) {
    const auto& n1 = l1.normal();
    const auto& n2 = l2.normal();
    Integer d = det2(n1, n2);
    if (d == 0)
        throw Error(ErrorKind::ParallelLines,
                    "normals " + to_string(n1) + " and " + to_string(n2) + " are collinear");
    // Cramer's rule on n1.x*x + n1.y*y = c1, n2.x*x + n2.y*y = c2.
    Rational x = Rational(Integer(l1.level() * n2.y - l2.level() * n1.y)) / Rational(d);
    Rational y = Rational(Integer(n1.x * l2.level() - n2.x * l1.level())) / Rational(d);
    return {x, y};
}

enum class PolygonKind { Point, Segment, Polygon };

inline std::string_view to_string(PolygonKind k) {
    switch (k) {
    case PolygonKind::Point: return "point";
    case PolygonKind::Segment: return "segment";
    case PolygonKind::Polygon: return "polygon";
    }
    return "unknown";
}

/// Convex lattice polygon, possibly degenerate. Vertices are counter-clockwise
/// starting at the lexicographically smallest one; a segment lists its two
/// endpoints in lexicographic order.
class LatticePolygon {
public:
    PolygonKind kind() const { return kind_; }
    const std::vector<LatticeVector>& vertices() const { return vertices_; }

    /// Twice the signed shoelace area (zero for degenerate kinds).
    Integer twice_area() const {
        Integer s = 0;
        if (kind_ != PolygonKind::Polygon)
            return s;
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            s += det2(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
        return s;
    }

    /// Membership in the closed region.
    bool contains(const LatticeVector& p) const {
        switch (kind_) {
        case PolygonKind::Point:
            return p == vertices_[0];
        case PolygonKind::Segment: {
            const auto& a = vertices_[0];
            const auto& b = vertices_[1];
            if (det2(b - a, p - a) != 0)
                return false;
            Integer t = pairing(p - a, b - a);
            return t >= 0 && t <= pairing(b - a, b - a);
        }
        case PolygonKind::Polygon:
            for (std::size_t i = 0; i < vertices_.size(); ++i) {
                const auto& a = vertices_[i];
                const auto& b = vertices_[(i + 1) % vertices_.size()];
                if (det2(b - a, p - a) < 0)
                    return false;
            }
            return true;
        }
        return false;
    }

    /// Membership on the boundary (the whole set, for degenerate kinds).
    bool on_boundary(const LatticeVector& p) const {
        if (kind_ != PolygonKind::Polygon)
            return contains(p);
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            const auto& a = vertices_[i];
            const auto& b = vertices_[(i + 1) % vertices_.size()];
            if (det2(b - a, p - a) == 0) {
                Integer t = pairing(p - a, b - a);
                if (t >= 0 && t <= pairing(b - a, b - a))
                    return true;
            }
        }
        return false;
    }

    friend bool operator==(const LatticePolygon& a, const LatticePolygon& b) {
        return a.kind_ == b.kind_ && a.vertices_ == b.vertices_;
    }

    friend LatticePolygon convex_hull(std::span<const LatticeVector> points);

private:
    LatticePolygon(PolygonKind kind, std::vector<LatticeVector> vertices)
        : kind_(kind), vertices_(std::move(vertices)) {}

    PolygonKind kind_;
    std::vector<LatticeVector> vertices_;
};

/// Andrew's monotone chain with collinear points dropped.
inline LatticePolygon convex_hull(std::span<const LatticeVector> points) {
    if (points.empty())
        throw Error(ErrorKind::DomainViolation, "convex hull of an empty point set");
    std::vector<LatticeVector> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() == 1)
        return LatticePolygon(PolygonKind::Point, std::move(pts));

    std::vector<LatticeVector> hull;
    hull.reserve(2 * pts.size());
    auto build = [&](auto first, auto last, std::size_t floor) {
        for (auto it = first; it != last; ++it) {
            while (hull.size() >= floor + 2 &&
                   det2(hull[hull.size() - 1] - hull[hull.size() - 2], *it - hull[hull.size() - 2]) <= 0)
                hull.pop_back();
            hull.push_back(*it);
        }
    };
    build(pts.begin(), pts.end(), 0);
    std::size_t lower = hull.size();
    hull.pop_back();
    build(pts.rbegin(), pts.rend(), lower - 1);
    hull.pop_back();

    if (hull.size() <= 2) {
        // all points collinear: endpoints are the lexicographic extremes
        return LatticePolygon(PolygonKind::Segment, {pts.front(), pts.back()});
    }
    return LatticePolygon(PolygonKind::Polygon, std::move(hull));
}

inline LatticePolygon convex_hull(std::initializer_list<LatticeVector> points) {
    return convex_hull(std::span<const LatticeVector>(points.begin(), points.size()));
}

inline Integer boundary_lattice_points(const LatticePolygon& p) {
    const auto& v = p.vertices();
    switch (p.kind()) {
    case PolygonKind::Point:
        return 1;
    case PolygonKind::Segment:
        return lattice_distance(v[0], v[1]) + 1;
    case PolygonKind::Polygon: {
        Integer b = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            b += lattice_distance(v[i], v[(i + 1) % v.size()]);
        return b;
    }
    }
    return 0;
}

/// Strictly interior lattice points, by Pick's formula.
inline Integer interior_lattice_points(const LatticePolygon& p) {
    if (p.kind() != PolygonKind::Polygon)
        return 0;
    return (p.twice_area() - boundary_lattice_points(p) + 2) / 2;
}

} // namespace toricbn
