#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "toricbn/lattice.hpp"

using namespace toricbn;

TEST(Det2, Examples) {
    EXPECT_EQ(det2({1, 0}, {0, 1}), 1);
    EXPECT_EQ(det2({-2, 1}, {1, -2}), 3);
    EXPECT_EQ(det2({1, 1}, {2, 2}), 0);
}

TEST(Primitivize, Examples) {
    auto [p, k] = primitivize({2, 4});
    EXPECT_EQ(p, LatticeVector(1, 2));
    EXPECT_EQ(k, 2);
    EXPECT_EQ(primitivize({1, 0}).first, LatticeVector(1, 0));
    EXPECT_EQ(primitivize({1, 0}).second, 1);
    auto [q, j] = primitivize({-3, 0});
    EXPECT_EQ(q, LatticeVector(-1, 0));
    EXPECT_EQ(j, 3);
}

TEST(Primitivize, ZeroVectorRejected) {
    try {
        primitivize({0, 0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroVector);
    }
    EXPECT_FALSE(LatticeVector(0, 0).is_primitive());
    EXPECT_EQ(gcd(Integer(0), Integer(0)), 0);
}

TEST(LatticeDistance, Examples) {
    EXPECT_EQ(lattice_distance({0, 0}, {0, 0}), 0);
    EXPECT_EQ(lattice_distance({0, 0}, {2, 0}), 2);
    EXPECT_EQ(lattice_distance({1, 0}, {2, 1}), 1);
}

TEST(LatticeDistance, MatchesSteppingOracleExhaustively) {
    // all pairs with |coords| <= 20, memoised on the difference vector
    constexpr int R = 20;
    std::vector<std::int64_t> memo((4 * R + 1) * (4 * R + 1), -1);
    int violations = 0;
    for (int ax = -R; ax <= R; ++ax)
        for (int ay = -R; ay <= R; ++ay)
            for (int bx = -R; bx <= R; ++bx)
                for (int by = -R; by <= R; ++by) {
                    int dx = bx - ax, dy = by - ay;
                    auto& slot = memo[(dx + 2 * R) * (4 * R + 1) + (dy + 2 * R)];
                    if (slot < 0)
                        slot = oracle::segment_distance({0, 0}, {dx, dy});
                    if (lattice_distance({ax, ay}, {bx, by}) != slot)
                        ++violations;
                }
    EXPECT_EQ(violations, 0);
}

TEST(LatticeDistance, SymmetricAndUnimodularInvariant) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> c(-15, 15);
    for (int k = 0; k < 2000; ++k) {
        LatticeVector a(c(rng), c(rng)), b(c(rng), c(rng)), t(c(rng), c(rng));
        auto m = oracle::random_sl2(rng);
        EXPECT_EQ(lattice_distance(a, b), lattice_distance(b, a));
        EXPECT_EQ(lattice_distance(a + t, b + t), lattice_distance(a, b));
        EXPECT_EQ(lattice_distance(oracle::act(m, a) + t, oracle::act(m, b) + t), lattice_distance(a, b));
    }
}

TEST(ConvexHull, Examples) {
    auto sq = convex_hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    EXPECT_EQ(sq.kind(), PolygonKind::Polygon);
    EXPECT_EQ(sq.vertices(), (std::vector<LatticeVector>{{0, 0}, {1, 0}, {1, 1}, {0, 1}}));

    auto tri = convex_hull({{2, 1}, {1, 2}, {1, 1}, {0, 0}});
    EXPECT_EQ(tri.vertices(), (std::vector<LatticeVector>{{0, 0}, {2, 1}, {1, 2}}));
    EXPECT_TRUE(tri.contains({1, 1}));
    EXPECT_FALSE(tri.on_boundary({1, 1}));

    auto pt = convex_hull({{5, 7}});
    EXPECT_EQ(pt.kind(), PolygonKind::Point);
    EXPECT_EQ(pt.vertices(), (std::vector<LatticeVector>{{5, 7}}));
}

TEST(ConvexHull, CollinearInputIsSegment) {
    auto seg = convex_hull({{0, 3}, {0, 0}, {0, 1}, {0, 2}});
    EXPECT_EQ(seg.kind(), PolygonKind::Segment);
    EXPECT_EQ(seg.vertices(), (std::vector<LatticeVector>{{0, 0}, {0, 3}}));
    EXPECT_TRUE(seg.contains({0, 2}));
    EXPECT_FALSE(seg.contains({0, 4}));
}

TEST(ConvexHull, ContainsEveryInputPoint) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> c(-10, 10), n(1, 12);
    for (int k = 0; k < 500; ++k) {
        std::vector<LatticeVector> pts;
        int count = n(rng);
        for (int i = 0; i < count; ++i)
            pts.emplace_back(c(rng), c(rng));
        auto hull = convex_hull(pts);
        for (const auto& p : pts)
            EXPECT_TRUE(hull.contains(p));
        if (hull.kind() == PolygonKind::Polygon) {
            const auto& v = hull.vertices();
            EXPECT_EQ(v.front(), *std::min_element(v.begin(), v.end()));
            for (std::size_t i = 0; i < v.size(); ++i)
                EXPECT_GT(det2(v[(i + 1) % v.size()] - v[i], v[(i + 2) % v.size()] - v[i]), 0);
        }
    }
}

TEST(LatticePoints, Examples) {
    EXPECT_EQ(interior_lattice_points(convex_hull({{0, 0}, {2, 1}, {1, 2}})), 1);
    EXPECT_EQ(interior_lattice_points(convex_hull({{0, 0}, {1, 0}, {0, 1}})), 0);
    EXPECT_EQ(interior_lattice_points(convex_hull({{0, 0}, {3, 0}, {0, 3}})), 1);
    EXPECT_EQ(boundary_lattice_points(convex_hull({{0, 0}, {2, 0}, {0, 2}})), 6);
    EXPECT_EQ(boundary_lattice_points(convex_hull({{0, 0}})), 1);
    EXPECT_EQ(boundary_lattice_points(convex_hull({{0, 0}, {0, 3}})), 4);
    EXPECT_EQ(interior_lattice_points(convex_hull({{0, 0}, {0, 3}})), 0);
}

TEST(LatticePoints, PickAgainstBoxScan) {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> c(-10, 10), n(3, 10);
    int polygons = 0;
    while (polygons < 500) {
        std::vector<LatticeVector> pts;
        int count = n(rng);
        for (int i = 0; i < count; ++i)
            pts.emplace_back(c(rng), c(rng));
        auto hull = convex_hull(pts);
        if (hull.kind() != PolygonKind::Polygon)
            continue;
        ++polygons;
        std::vector<oracle::P> ccw;
        for (const auto& v : hull.vertices())
            ccw.push_back({v.x.convert_to<std::int64_t>(), v.y.convert_to<std::int64_t>()});
        auto counts = oracle::scan_polygon(ccw);
        auto area2 = oracle::twice_shoelace(ccw);
        EXPECT_EQ(interior_lattice_points(hull), counts.interior);
        EXPECT_EQ(boundary_lattice_points(hull), counts.boundary);
        EXPECT_EQ(area2, 2 * counts.interior + counts.boundary - 2);
        EXPECT_EQ(hull.twice_area(), area2);
    }
}

TEST(LineIntersection, Examples) {
    auto p = line_intersection(Line({1, 0}, 0), Line({0, 1}, 0));
    EXPECT_TRUE(p.is_lattice());
    EXPECT_EQ(p.lattice(), LatticeVector(0, 0));

    auto q = line_intersection(Line({-1, 1}, -1), Line({-2, 1}, -3));
    EXPECT_TRUE(q.is_lattice());
    EXPECT_EQ(q.lattice(), LatticeVector(2, 1));

    auto r = line_intersection(Line({2, -1}, 0), Line({1, 1}, 1));
    EXPECT_FALSE(r.is_lattice());
    EXPECT_EQ(r.x, Rational(1, 3));
    EXPECT_EQ(r.y, Rational(2, 3));
    EXPECT_EQ(to_string(r), "(1/3,2/3)");
}

TEST(LineIntersection, ParallelRejected) {
    try {
        line_intersection(Line({1, 0}, 0), Line({-1, 0}, 2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ParallelLines);
    }
    EXPECT_THROW(Line({2, 0}, 1), Error);
}

TEST(LineIntersection, SolutionSatisfiesBothEquations) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> c(-9, 9);
    int checked = 0;
    while (checked < 1000) {
        LatticeVector n1(c(rng), c(rng)), n2(c(rng), c(rng));
        if (!n1.is_primitive() || !n2.is_primitive() || det2(n1, n2) == 0)
            continue;
        Line l1(n1, c(rng)), l2(n2, c(rng));
        auto p = line_intersection(l1, l2);
        EXPECT_TRUE(l1.contains(p));
        EXPECT_TRUE(l2.contains(p));
        ++checked;
    }
}
