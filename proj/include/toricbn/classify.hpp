#pragma once

// Low-degree classification of curves on smooth complete toric surfaces,
// with explicit contraction witnesses, plus the dimension counts used to
// decide whether multiple covers can form excess components.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "toricbn/fan.hpp"
#include "toricbn/newton.hpp"

namespace toricbn {

/// An edge of the circumscribed polygon of lattice length one.
struct UnitEdge {
    std::size_t ray_index = 0;
    LatticeVector ray;
    LatticeVector from;
    LatticeVector to;
};

struct HighDegree {};

/// Degree 2: the curve is a fibre of the projection along `contracted_direction`.
struct FiberOfProjection {
    std::pair<std::size_t, std::size_t> ray_pair;
    LatticeVector contracted_direction;
    std::array<UnitEdge, 2> edges;
};

/// Degree 3: the circumscribed polygon is a unit triangle on a zero-sum triple.
struct MapsToFakePlane {
    std::array<std::size_t, 3> ray_triple;
    FakePlane fake_plane;
    std::array<UnitEdge, 3> primitive_certificate;
};

struct Classification {
    Integer degree;
    std::variant<HighDegree, FiberOfProjection, MapsToFakePlane> kind;

    std::string_view tag() const {
        switch (kind.index()) {
        case 0: return "high_degree";
        case 1: return "fiber_of_projection";
        default: return "maps_to_fake_plane";
        }
    }
};

namespace detail {

[[noreturn]] inline void contradiction(const std::string& what) {
    throw Error(ErrorKind::InternalContradiction, what);
}

inline UnitEdge unit_edge(const Fan& fan, const EdgeRecord& e) {
    return {e.ray_index, fan.ray(e.ray_index), e.from.lattice(), e.to.lattice()};
}

} // namespace detail

inline Classification classify(const Fan& fan, const LaurentCurve& curve) {
    detail::require_smooth(fan);
    auto poly = circumscribed_polygon(fan, curve);

    Integer degree = 0;
    std::vector<std::size_t> positive;
    for (const auto& e : poly.edges) {
        if (!e.delta)
            detail::contradiction("non-lattice vertex on a smooth fan");
        degree += *e.delta;
        if (*e.delta > 0)
            positive.push_back(e.ray_index);
    }

    // opposite edges of a degenerate polygon have equal length
    if (positive.size() == 2 && degree % 2 != 0)
        detail::contradiction("two-edge polygon with odd perimeter");
    if (positive.size() < 2)
        detail::contradiction("circumscribed polygon has fewer than two edges");

    if (degree >= 4)
        return {degree, HighDegree{}};

    if (degree == 2) {
        if (positive.size() != 2)
            detail::contradiction("degree 2 without two unit edges");
        std::size_t i = positive[0], j = positive[1];
        if (!(fan.ray(i) + fan.ray(j)).is_zero())
            detail::contradiction("degree-2 edges are not on opposite rays");
        if (!is_contracted_by_projection(curve, fan.ray(i)))
            detail::contradiction("degree-2 curve is not contained in a fibre");
        FiberOfProjection f{{i, j},
                            fan.ray(i),
                            {detail::unit_edge(fan, poly.edges[i]), detail::unit_edge(fan, poly.edges[j])}};
        return {degree, f};
    }

    if (degree == 3) {
        if (positive.size() != 3)
            detail::contradiction("degree 3 without three unit edges");
        std::array<std::size_t, 3> t{positive[0], positive[1], positive[2]};
        if (!(fan.ray(t[0]) + fan.ray(t[1]) + fan.ray(t[2])).is_zero())
            detail::contradiction("unit triangle on rays with non-zero sum");
        MapsToFakePlane w{t,
                          make_fake_plane(fan.ray(t[0]), fan.ray(t[1]), fan.ray(t[2])),
                          {detail::unit_edge(fan, poly.edges[t[0]]), detail::unit_edge(fan, poly.edges[t[1]]),
                           detail::unit_edge(fan, poly.edges[t[2]])}};
        return {degree, w};
    }

    detail::contradiction("anti-canonical degree " + degree.str() + " below 2");
}

/// Unit-triangle certificate of the curve with respect to a fake plane, or
/// nothing when the circumscribed triangle is not unimodular-edged.
inline std::optional<std::array<UnitEdge, 3>> fake_plane_certificate(const FakePlane& plane,
                                                                      const LaurentCurve& curve) {
    Fan f = plane.fan();
    auto poly = circumscribed_polygon(f, curve);
    std::array<UnitEdge, 3> out;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& e = poly.edges[i];
        if (!e.delta || *e.delta != 1)
            return std::nullopt;
        out[i] = detail::unit_edge(f, e);
    }
    return out;
}

struct PairWitness {
    std::pair<std::size_t, std::size_t> ray_pair;
    LatticeVector contracted_direction;
};

struct TripleWitness {
    std::array<std::size_t, 3> ray_triple;
    FakePlane fake_plane;
    std::array<UnitEdge, 3> certificate; // edges indexed within the three-ray fan
};

struct WitnessScan {
    std::vector<PairWitness> pairs;
    std::vector<TripleWitness> triples;

    bool empty() const { return pairs.empty() && triples.empty(); }
};

/// Every opposite pair contracting the curve and every zero-sum triple on
/// which the curve becomes a primitive (unit-triangle) curve.
inline WitnessScan line_witness_scan(const Fan& fan, const LaurentCurve& curve) {
    detail::require_smooth(fan);
    WitnessScan scan;
    for (const auto& [i, j] : opposite_ray_pairs(fan))
        if (is_contracted_by_projection(curve, fan.ray(i)))
            scan.pairs.push_back({{i, j}, fan.ray(i)});
    for (const auto& t : zero_sum_triples(fan))
        if (auto cert = fake_plane_certificate(t.plane, curve))
            scan.triples.push_back({t.indices, t.plane, *cert});
    return scan;
}

/// A singular zero-sum triple whose witness status flips under negation.
struct OrientationNote {
    std::array<std::size_t, 3> ray_triple;
    bool witness_as_given = false;
    bool witness_negated = false;
};

inline std::vector<OrientationNote> orientation_notes(const Fan& fan, const LaurentCurve& curve) {
    std::vector<OrientationNote> out;
    for (const auto& t : zero_sum_triples(fan)) {
        if (t.plane.is_projective_plane)
            continue;
        const auto& r = t.plane.rays;
        FakePlane negated = make_fake_plane(-r[0], -r[1], -r[2]);
        bool given = fake_plane_certificate(t.plane, curve).has_value();
        bool neg = fake_plane_certificate(negated, curve).has_value();
        if (given != neg)
            out.push_back({t.indices, given, neg});
    }
    return out;
}

// dimension counts

namespace detail {

inline void require(bool ok, const char* what) {
    if (!ok)
        throw Error(ErrorKind::DomainViolation, what);
}

} // namespace detail

/// Brill-Noether number g - (r+1)(g-d+r).
inline std::int64_t rho(std::int64_t g, std::int64_t r, std::int64_t d) {
    detail::require(g >= 0 && r >= 1 && d >= 0, "rho needs g >= 0, r >= 1, d >= 0");
    return g - (r + 1) * (g - d + r);
}

/// Maps of degree d from a genus-g curve to P^r.
inline std::int64_t expected_dim_maps_projective(std::int64_t g, std::int64_t r, std::int64_t d) {
    detail::require(g >= 0, "genus must be non-negative");
    return (r + 1) * d + r * (1 - g);
}

/// Maps from a genus-g curve to a surface, in a class of anti-canonical degree deg_k.
inline std::int64_t expected_dim_maps_surface(std::int64_t g, std::int64_t deg_k) {
    detail::require(g >= 0, "genus must be non-negative");
    return deg_k + 2 * (1 - g);
}

/// Severi variety of genus-g curves in a class of anti-canonical degree deg_k.
inline std::int64_t severi_dim(std::int64_t g, std::int64_t deg_k) {
    detail::require(g >= 0, "genus must be non-negative");
    return deg_k + g - 1;
}

/// Maps to the blow-up Y of P^r along a linear space.
inline std::int64_t farkas_expected_dim(std::int64_t g, std::int64_t r, std::int64_t deg_ky) {
    detail::require(g >= 0, "genus must be non-negative");
    return deg_ky + r * (1 - g);
}

/// Dimension of the family of degree-m covers of rational image curves minus
/// the expected dimension of maps in the total class.
inline std::int64_t multiple_cover_excess(std::int64_t g, std::int64_t m, std::int64_t image_deg) {
    detail::require(g >= 0 && m >= 2 && image_deg >= 2, "excess needs g >= 0, m >= 2, image degree >= 2");
    return g - (m - 1) * (image_deg - 2);
}

struct ExpectedDimension {
    bool generically_smooth = true;
};
struct NoSuchCovers {
    std::string reason;
};
struct ObstructedComponent {
    std::int64_t family_dim = 0;
    std::int64_t excess = 0;
    std::optional<Classification> witness;
};
struct BoundarySpecialCase {
    std::int64_t family_dim = 6;
};
struct NotAComponent {
    std::int64_t family_dim = 0;
};
struct LowDegreeBirational {
    std::optional<Classification> witness;
};

struct Verdict {
    std::int64_t genus = 0;
    std::int64_t cover_degree = 1;
    std::int64_t image_degree = 0;
    int image_genus = 0;
    std::int64_t expected_dim = 0;
    std::variant<ExpectedDimension, NoSuchCovers, ObstructedComponent, BoundarySpecialCase, NotAComponent,
                 LowDegreeBirational>
        outcome;

    std::string_view tag() const {
        static constexpr std::string_view tags[] = {"expected_dimension",    "no_such_covers",
                                                    "obstructed_component",  "boundary_special_case",
                                                    "not_a_component",       "low_degree_birational"};
        return tags[outcome.index()];
    }
};

/// Decides what the dimension counts say about maps of genus g that are
/// degree-m covers of an image curve of the given anti-canonical degree.
/// `image_genus` selects the rational (0) or elliptic (1) image branch and
/// only matters for m >= 2. `witness` is attached where a low-degree image
/// explains the failure.
inline Verdict bn_verdict(std::int64_t g, std::int64_t m, std::int64_t image_degree, int image_genus = 0,
                          std::optional<Classification> witness = std::nullopt) {
    detail::require(g >= 0, "genus must be non-negative");
    detail::require(m >= 1, "cover degree must be positive");
    detail::require(image_degree >= 2, "image anti-canonical degree must be at least 2");
    detail::require(image_genus == 0 || image_genus == 1, "image genus branch must be 0 or 1");

    Verdict v;
    v.genus = g;
    v.cover_degree = m;
    v.image_degree = image_degree;
    v.image_genus = image_genus;
    v.expected_dim = expected_dim_maps_surface(g, m * image_degree);

    if (m == 1) {
        if (image_degree >= 4)
            v.outcome = ExpectedDimension{};
        else
            v.outcome = LowDegreeBirational{std::move(witness)};
        return v;
    }

    if (image_genus == 1) {
        if (g != 1) {
            v.outcome = NoSuchCovers{"a general curve of genus " + std::to_string(g) +
                                     " has no cover of degree > 1 onto a genus-1 curve"};
            return v;
        }
        // finitely many covers, moving only with the image
        v.outcome = NotAComponent{image_degree};
        return v;
    }

    std::int64_t r = rho(g, 1, m);
    if (r < 0) {
        v.outcome = NoSuchCovers{"rho(g,1,m) = " + std::to_string(r) + " < 0"};
        return v;
    }
    std::int64_t family = expected_dim_maps_projective(g, 1, m) + severi_dim(0, image_degree);
    std::int64_t excess = multiple_cover_excess(g, m, image_degree);
    if (family - v.expected_dim != excess)
        throw Error(ErrorKind::InternalContradiction, "excess does not match the dimension counts");

    if (excess > 0)
        v.outcome = ObstructedComponent{family, excess, std::move(witness)};
    else if (excess == 0 && image_degree == 4 && g == 2 * m - 2)
        v.outcome = BoundarySpecialCase{family};
    else
        v.outcome = NotAComponent{family};
    return v;
}

/// Verdict with the image degree and witness taken from a curve on a toric surface.
inline Verdict bn_verdict(std::int64_t g, std::int64_t m, const Fan& fan, const LaurentCurve& curve,
                          int image_genus = 0) {
    Classification c = classify(fan, curve);
    std::int64_t degree = c.degree.convert_to<std::int64_t>();
    std::optional<Classification> witness;
    if (!std::holds_alternative<HighDegree>(c.kind))
        witness = std::move(c);
    return bn_verdict(g, m, degree, image_genus, std::move(witness));
}

} // namespace toricbn
