#pragma once

// Complete fans in N = Z^2, presets, blow-ups, ray deletion and class groups.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "toricbn/lattice.hpp"
#include "toricbn/smith.hpp"

namespace toricbn {

namespace detail {

// 0 for angles in [0, pi), 1 for [pi, 2pi).
inline int half_plane(const LatticeVector& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

} // namespace detail

/// Strict angular order measured counter-clockwise from the positive x-axis.
inline bool angle_less(const LatticeVector& a, const LatticeVector& b) {
    int ha = detail::half_plane(a);
    int hb = detail::half_plane(b);
    if (ha != hb)
        return ha < hb;
    return det2(a, b) > 0;
}

/// A complete 2D fan. Rays are primitive, distinct, and sorted
/// counter-clockwise by angle in [0, 2pi); cone i is spanned by ray i and
/// ray (i + 1) mod size. Only `build_fan` constructs one.
class Fan {
public:
    const std::vector<LatticeVector>& rays() const { return rays_; }
    std::size_t size() const { return rays_.size(); }
    const LatticeVector& ray(std::size_t i) const { return rays_.at(i); }
    const LatticeVector& next_ray(std::size_t i) const { return rays_[(i + 1) % rays_.size()]; }
    const LatticeVector& prev_ray(std::size_t i) const { return rays_[(i + rays_.size() - 1) % rays_.size()]; }

    /// Index of a ray, or size() when absent.
    std::size_t index_of(const LatticeVector& r) const {
        auto it = std::find(rays_.begin(), rays_.end(), r);
        return static_cast<std::size_t>(it - rays_.begin());
    }

    /// The cone containing v; a vector on ray i belongs to cone i.
    std::size_t locate_cone(const LatticeVector& v) const {
        for (std::size_t i = 0; i < rays_.size(); ++i)
            if (det2(rays_[i], v) >= 0 && det2(v, next_ray(i)) > 0)
                return i;
        throw Error(ErrorKind::DomainViolation, "vector " + to_string(v) + " lies in no cone");
    }

    friend bool operator==(const Fan& a, const Fan& b) { return a.rays_ == b.rays_; }

    friend Fan build_fan(std::span<const LatticeVector> raw_rays);

private:
    explicit Fan(std::vector<LatticeVector> rays) : rays_(std::move(rays)) {}

    std::vector<LatticeVector> rays_;
};

inline Fan build_fan(std::span<const LatticeVector> raw_rays) {
    if (raw_rays.size() < 3)
        throw Error(ErrorKind::TooFewRays, "a complete fan needs at least 3 rays, got " +
                                               std::to_string(raw_rays.size()));
    for (const auto& r : raw_rays)
        if (!r.is_primitive())
            throw Error(ErrorKind::NonPrimitiveRay, "ray " + to_string(r) + " is not primitive");

    std::vector<LatticeVector> rays(raw_rays.begin(), raw_rays.end());
    std::sort(rays.begin(), rays.end(), angle_less);
    for (std::size_t i = 0; i + 1 < rays.size(); ++i)
        if (rays[i] == rays[i + 1])
            throw Error(ErrorKind::DuplicateRay, "ray " + to_string(rays[i]) + " appears twice");

    for (std::size_t i = 0; i < rays.size(); ++i) {
        const auto& a = rays[i];
        const auto& b = rays[(i + 1) % rays.size()];
        if (det2(a, b) <= 0)
            throw Error(ErrorKind::NotComplete,
                        "rays " + to_string(a) + " and " + to_string(b) + " do not span a strictly convex cone");
    }
    return Fan(std::move(rays));
}

inline Fan build_fan(std::initializer_list<LatticeVector> raw_rays) {
    return build_fan(std::span<const LatticeVector>(raw_rays.begin(), raw_rays.size()));
}

struct SmoothnessReport {
    bool smooth = true;
    std::vector<Integer> cone_indices;
};

inline SmoothnessReport smoothness(const Fan& fan) {
    SmoothnessReport report;
    for (std::size_t i = 0; i < fan.size(); ++i) {
        Integer idx = abs(det2(fan.ray(i), fan.next_ray(i)));
        if (idx != 1)
            report.smooth = false;
        report.cone_indices.push_back(std::move(idx));
    }
    return report;
}

inline bool is_smooth(const Fan& fan) { return smoothness(fan).smooth; }

/// A complete fan on three rays with zero sum.
struct FakePlane {
    std::array<LatticeVector, 3> rays;        // counter-clockwise
    bool is_projective_plane = false;
    std::array<Integer, 3> cone_indices;

    Fan fan() const { return build_fan({rays[0], rays[1], rays[2]}); }
};

inline FakePlane make_fake_plane(const LatticeVector& n1, const LatticeVector& n2, const LatticeVector& n3) {
    for (const auto* r : {&n1, &n2, &n3})
        if (!r->is_primitive())
            throw Error(ErrorKind::InvalidFakePlane, "ray " + to_string(*r) + " is not primitive");
    if (!(n1 + n2 + n3).is_zero())
        throw Error(ErrorKind::InvalidFakePlane, "rays do not sum to zero");
    if (det2(n1, n2) == 0 || det2(n2, n3) == 0 || det2(n3, n1) == 0)
        throw Error(ErrorKind::InvalidFakePlane, "rays are not pairwise non-collinear");
    Fan f = build_fan({n1, n2, n3});
    FakePlane p;
    auto report = smoothness(f);
    for (std::size_t i = 0; i < 3; ++i) {
        p.rays[i] = f.ray(i);
        p.cone_indices[i] = report.cone_indices[i];
        if (report.cone_indices[i] == 1)
            p.is_projective_plane = true;
    }
    return p;
}

// presets

inline Fan preset_p2() { return build_fan({{1, 0}, {0, 1}, {-1, -1}}); }

inline Fan preset_p1xp1() { return build_fan({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }

inline Fan preset_hirzebruch(std::int64_t a) {
    if (a < 0)
        throw Error(ErrorKind::DomainViolation, "Hirzebruch parameter must be non-negative");
    return build_fan({{1, 0}, {0, 1}, {std::int64_t{-1}, a}, {0, -1}});
}

/// Blow-up of P^2 at its three torus-fixed points.
inline Fan preset_bl3p2() { return build_fan({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}); }

inline Fan preset_fake_plane(const LatticeVector& n1, const LatticeVector& n2) {
    return make_fake_plane(n1, n2, -(n1 + n2)).fan();
}

/// Stellar subdivision of the smooth cone `cone_index`.
inline Fan blow_up(const Fan& fan, std::size_t cone_index) {
    if (cone_index >= fan.size())
        throw Error(ErrorKind::IndexOutOfRange, "cone index " + std::to_string(cone_index) + " out of range");
    const auto& a = fan.ray(cone_index);
    const auto& b = fan.next_ray(cone_index);
    if (abs(det2(a, b)) != 1)
        throw Error(ErrorKind::SingularCone, "cone (" + to_string(a) + ", " + to_string(b) + ") is not smooth");
    std::vector<LatticeVector> rays = fan.rays();
    rays.push_back(a + b);
    return build_fan(rays);
}

inline std::vector<std::pair<std::size_t, std::size_t>> opposite_ray_pairs(const Fan& fan) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < fan.size(); ++i)
        for (std::size_t j = i + 1; j < fan.size(); ++j)
            if ((fan.ray(i) + fan.ray(j)).is_zero())
                out.emplace_back(i, j);
    return out;
}

struct ZeroSumTriple {
    std::array<std::size_t, 3> indices; // ascending
    FakePlane plane;
};

inline std::vector<ZeroSumTriple> zero_sum_triples(const Fan& fan) {
    std::vector<ZeroSumTriple> out;
    const std::size_t c = fan.size();
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = i + 1; j < c; ++j) {
            LatticeVector target = -(fan.ray(i) + fan.ray(j));
            for (std::size_t k = j + 1; k < c; ++k)
                if (fan.ray(k) == target)
                    out.push_back({{i, j, k}, make_fake_plane(fan.ray(i), fan.ray(j), fan.ray(k))});
        }
    return out;
}

/// Sub-fan on the kept rays. The result may be singular.
inline Fan delete_rays(const Fan& fan, std::span<const std::size_t> keep) {
    std::set<std::size_t> kept(keep.begin(), keep.end());
    std::vector<LatticeVector> rays;
    for (std::size_t i : kept) {
        if (i >= fan.size())
            throw Error(ErrorKind::IndexOutOfRange, "ray index " + std::to_string(i) + " out of range");
        rays.push_back(fan.ray(i));
    }
    if (rays.size() < 3)
        throw Error(ErrorKind::NotComplete, "fewer than three rays kept");
    return build_fan(rays);
}

inline Fan delete_rays(const Fan& fan, std::initializer_list<std::size_t> keep) {
    return delete_rays(fan, std::span<const std::size_t>(keep.begin(), keep.size()));
}

/// Cokernel of M -> Z^rays, m |-> (<m, n_i>)_i, in Smith coordinates.
struct ClassGroup {
    std::size_t rank = 0;
    std::vector<Integer> torsion;                  // invariant factors > 1, ascending
    std::vector<std::vector<Integer>> ray_classes; // per ray: torsion coords, then free coords
};

inline ClassGroup class_group(const Fan& fan) {
    const std::size_t c = fan.size();
    IntMatrix a(c, std::vector<Integer>(2));
    for (std::size_t i = 0; i < c; ++i) {
        a[i][0] = fan.ray(i).x;
        a[i][1] = fan.ray(i).y;
    }
    SmithForm snf = smith_normal_form(a);

    ClassGroup g;
    std::vector<std::size_t> torsion_rows;
    std::vector<std::size_t> free_rows;
    for (std::size_t k = 0; k < c; ++k) {
        if (k < snf.invariants.size() && snf.invariants[k] != 0) {
            if (snf.invariants[k] != 1) {
                torsion_rows.push_back(k);
                g.torsion.push_back(snf.invariants[k]);
            }
        } else {
            free_rows.push_back(k);
        }
    }
    g.rank = free_rows.size();
    g.ray_classes.resize(c);
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t k : torsion_rows) {
            const Integer& d = snf.invariants[k];
            Integer r = snf.left[k][i] % d;
            if (r < 0)
                r += d;
            g.ray_classes[i].push_back(r);
        }
        for (std::size_t k : free_rows)
            g.ray_classes[i].push_back(snf.left[k][i]);
    }
    return g;
}

/// Sum of per-ray intersection numbers, i.e. the pairing with -K.
inline Integer anticanonical_pairing(const Fan& fan, std::span<const Integer> intersections) {
    if (intersections.size() != fan.size())
        throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(fan.size()) + " entries, got " +
                                                   std::to_string(intersections.size()));
    Integer total = 0;
    for (const auto& v : intersections)
        total += v;
    return total;
}

} // namespace toricbn
