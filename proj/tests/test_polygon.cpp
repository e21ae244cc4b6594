#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <polyfoil/errors.hpp>
#include <polyfoil/polygon.hpp>
#include <polyfoil/tolerances.hpp>

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace polyfoil;
using testsupport::rel_err;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("triangle membership accepts nondegenerate triples") {
    CHECK(in_V({1, 1, 1}));
    CHECK(in_V({3, 4, 5}));
    CHECK(in_V({11, 6, 11}));
}

TEST_CASE("triangle membership rejects degenerate and boundary triples") {
    CHECK_FALSE(in_V({1, 1, 2}));          // collinear, s = t + x
    CHECK_FALSE(in_V({1, 1, 2.0000001}));  // beyond collinear
    CHECK_FALSE(in_V({1e-12, 1, 1}));      // side below the margin
}

TEST_CASE("triangle membership rejects malformed input") {
    CHECK_THROWS_AS((void)in_V({-1, 1, 1}), validation_error);
    CHECK_THROWS_AS((void)in_V({0, 1, 1}), validation_error);
    CHECK_THROWS_AS((void)in_V({std::nan(""), 1, 1}), validation_error);
    CHECK_THROWS_AS((void)in_V({1, std::numeric_limits<double>::infinity(), 1}),
                    validation_error);
}

TEST_CASE("heron area on reference triangles") {
    CHECK(heron_area({3, 4, 5}) == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(heron_area({1, 1, 1}) == doctest::Approx(std::sqrt(3.0) / 4.0).epsilon(1e-14));
    // isosceles 11, 11, 6 in fan order (11, 6, 11)
    CHECK(heron_area({11, 6, 11}) == doctest::Approx(12.0 * std::sqrt(7.0)).epsilon(1e-14));
    CHECK_THROWS_AS((void)heron_area({1, 1, 2}), domain_error);
}

TEST_CASE("heron area is exactly invariant under side permutations") {
    const double sides[3] = {0.731, 1.207, 0.988};
    const double ref = heron_area({sides[0], sides[1], sides[2]});
    int idx[3] = {0, 1, 2};
    std::sort(idx, idx + 3);
    do {
        CHECK(heron_area({sides[idx[0]], sides[idx[1]], sides[idx[2]]}) == ref);
    } while (std::next_permutation(idx, idx + 3));
}

TEST_CASE("apex angle branches") {
    CHECK(apex_angle({1, std::sqrt(2.0), 1}) == doctest::Approx(kPi / 2).epsilon(1e-14));
    CHECK(apex_angle({1, 1, 1}) == doctest::Approx(kPi / 3).epsilon(1e-14));

    // Obtuse case, checked against a coordinate reconstruction of the
    // triangle: apex at the origin, one ray on the x-axis.
    const TriangleTriple tr{1, 1.9, 1};
    const double nx = (tr.t * tr.t + tr.s * tr.s - tr.x * tr.x) / (2.0 * tr.t);
    const double ny = std::sqrt(tr.s * tr.s - nx * nx);
    const double measured = std::atan2(ny, nx);
    CHECK(apex_angle(tr) == doctest::Approx(measured).epsilon(1e-12));
    CHECK(apex_angle(tr) == doctest::Approx(std::acos((2.0 - 3.61) / 2.0)).epsilon(1e-12));
    CHECK(apex_angle(tr) > kPi / 2);
}

TEST_CASE("apex angle is exactly symmetric in the two rays") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> len(0.5, 2.0);
    for (int i = 0; i < 200; ++i) {
        const double t = len(rng), s = len(rng);
        const double xmax = 0.95 * (t + s), xmin = 1.05 * std::abs(t - s) + 1e-3;
        if (xmin >= xmax) continue;
        std::uniform_real_distribution<double> xs(xmin, xmax);
        const double x = xs(rng);
        CHECK(apex_angle({t, x, s}) == apex_angle({s, x, t}));
    }
}

TEST_CASE("apex angle branch matches the sign of x^2 - t^2 - s^2") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> len(0.5, 2.0);
    for (int i = 0; i < 500; ++i) {
        TriangleTriple tr{len(rng), len(rng), len(rng)};
        if (!in_V(tr)) continue;
        const double d = tr.x * tr.x - tr.t * tr.t - tr.s * tr.s;
        const double a = apex_angle(tr);
        if (d > 1e-12) CHECK(a > kPi / 2);
        if (d < -1e-12) CHECK(a < kPi / 2);
    }
}

TEST_CASE("area and angle scaling") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> len(0.5, 2.0);
    for (int i = 0; i < 100; ++i) {
        TriangleTriple tr{len(rng), len(rng), len(rng)};
        if (!in_V(tr)) continue;
        for (double lam : {0.5, 2.0, 10.0}) {
            TriangleTriple sc{lam * tr.t, lam * tr.x, lam * tr.s};
            CHECK(rel_err(heron_area(sc), lam * lam * heron_area(tr)) < 1e-12);
            CHECK(rel_err(apex_angle(sc), apex_angle(tr)) < 1e-12);
        }
    }
}

TEST_CASE("admissible tuples") {
    CHECK(in_Omega(star_polygon({3, 4, 5})));
    CHECK(in_Omega(star_polygon({1, 1, std::sqrt(2.0), 1, 1})));

    // Two obtuse fans still fit under a full turn.
    const StarPolygon wide = star_polygon({1, 1.99, 1, 1.99, 1});
    CHECK(in_Omega(wide));
    const double each = apex_angle({1, 1.99, 1});
    CHECK(2.0 * each < 2.0 * kPi);

    // Three nearly flat fans exceed the full turn.
    const StarPolygon over = star_polygon({1, 1.999, 1, 1.999, 1, 1.999, 1});
    CHECK(3.0 * apex_angle({1, 1.999, 1}) > 2.0 * kPi);
    CHECK_FALSE(in_Omega(over));

    // A degenerate fan triple fails membership.
    CHECK_FALSE(in_Omega(star_polygon({1, 1, 2})));
}

TEST_CASE("malformed tuples are rejected") {
    CHECK_THROWS_AS((void)star_polygon({1, 1}), validation_error);
    CHECK_THROWS_AS((void)star_polygon({1, 1, 1, 1}), validation_error);
    StarPolygon bad = star_polygon({1, 1, 1});
    bad.n = 5;
    CHECK_THROWS_AS((void)in_Omega(bad), validation_error);
    StarPolygon nan = star_polygon({1, std::nan(""), 1});
    CHECK_THROWS_AS((void)in_Omega(nan), validation_error);
}

TEST_CASE("vertex reconstruction of reference polygons") {
    SUBCASE("3-4-5 triangle") {
        const StarPolygon p = star_polygon({3, 4, 5});
        const VertexChain vc = to_vertices(p);
        REQUIRE(vc.vertices.size() == 3);
        CHECK(vc.vertices[2].x == 0.0);
        CHECK(vc.vertices[2].y == 0.0);
        CHECK(vc.vertices[0].x == doctest::Approx(3.0));
        CHECK(vc.vertices[0].y == 0.0);
        const double a = apex_angle({3, 4, 5});
        CHECK(vc.vertices[1].x == doctest::Approx(5.0 * std::cos(a)));
        CHECK(vc.vertices[1].y == doctest::Approx(5.0 * std::sin(a)));
        const double side = std::hypot(vc.vertices[1].x - vc.vertices[0].x,
                                       vc.vertices[1].y - vc.vertices[0].y);
        CHECK(side == doctest::Approx(4.0).epsilon(1e-13));
    }
    SUBCASE("unit square") {
        const StarPolygon p = star_polygon({1, 1, std::sqrt(2.0), 1, 1});
        const VertexChain vc = to_vertices(p);
        REQUIRE(vc.vertices.size() == 4);
        CHECK(vc.vertices[0].x == doctest::Approx(1.0));
        CHECK(vc.vertices[0].y == doctest::Approx(0.0));
        CHECK(vc.vertices[1].x == doctest::Approx(1.0));
        CHECK(vc.vertices[1].y == doctest::Approx(1.0));
        CHECK(vc.vertices[2].x == doctest::Approx(0.0));
        CHECK(vc.vertices[2].y == doctest::Approx(1.0));
        CHECK(testsupport::shoelace_area(vc) == doctest::Approx(1.0).epsilon(1e-13));
    }
    SUBCASE("inadmissible tuple is refused") {
        CHECK_THROWS_AS((void)to_vertices(star_polygon({1, 1, 2})), domain_error);
    }
}

TEST_CASE("length tuple from a vertex chain") {
    SUBCASE("unit square") {
        VertexChain vc;
        vc.vertices = {{1, 0}, {1, 1}, {0, 1}, {0, 0}};
        const StarPolygon p = from_vertices(vc);
        CHECK(p.n == 4);
        CHECK(p.lengths[0] == doctest::Approx(1.0));
        CHECK(p.lengths[1] == doctest::Approx(1.0));
        CHECK(p.lengths[2] == doctest::Approx(std::sqrt(2.0)));
        CHECK(p.lengths[3] == doctest::Approx(1.0));
        CHECK(p.lengths[4] == doctest::Approx(1.0));
    }
    SUBCASE("collinear chain is refused") {
        VertexChain vc;
        vc.vertices = {{0, 0}, {1, 0}, {2, 0}};
        CHECK_THROWS_AS((void)from_vertices(vc), domain_error);
    }
    SUBCASE("clockwise chain is refused") {
        VertexChain vc;
        vc.vertices = {{0, 1}, {1, 1}, {1, 0}, {0, 0}};
        CHECK_THROWS_AS((void)from_vertices(vc), domain_error);
    }
    SUBCASE("spiral chain accumulating past a full turn is refused") {
        // Four rays 2.5 rad apart: each fan angle is admissible but the
        // sum winds past 2*pi.
        VertexChain vc;
        for (double ang : {0.0, 2.5, 5.0, 7.5})
            vc.vertices.push_back({std::cos(ang), std::sin(ang)});
        vc.vertices.push_back({0, 0});
        CHECK_THROWS_AS((void)from_vertices(vc), domain_error);
    }
}

TEST_CASE("round trip through vertices over random polygons") {
    std::mt19937_64 rng(11);
    for (int n = 3; n <= 12; ++n) {
        for (int rep = 0; rep < 50; ++rep) {
            const StarPolygon p = testsupport::random_star_polygon(n, rng);
            REQUIRE(in_Omega(p));
            const StarPolygon q = from_vertices(to_vertices(p));
            double max_len = 0.0, max_diff = 0.0;
            for (std::size_t i = 0; i < p.lengths.size(); ++i) {
                max_len = std::max(max_len, p.lengths[i]);
                max_diff = std::max(max_diff, std::abs(p.lengths[i] - q.lengths[i]));
            }
            CHECK(max_diff < tol::reconstruct * max_len);
        }
    }
}

TEST_CASE("fan area agrees with the shoelace oracle") {
    std::mt19937_64 rng(12);
    for (int n = 3; n <= 12; ++n) {
        for (int rep = 0; rep < 40; ++rep) {
            const StarPolygon p = testsupport::random_star_polygon(n, rng);
            double fan = 0.0;
            for (int k = 1; k <= n - 2; ++k) fan += heron_area(p.triple(k));
            const double shoe = testsupport::shoelace_area(to_vertices(p));
            CHECK(rel_err(fan, shoe) < 1e-9);
        }
    }
}

TEST_CASE("convexity detection") {
    CHECK(is_convex(star_polygon({1, 1, std::sqrt(2.0), 1, 1})));

    // Star-shaped about the last vertex but reflex at the second.
    VertexChain dent;
    dent.vertices = {{2, 0}, {1, 0.2}, {0, 2}, {0, 0}};
    const StarPolygon p = from_vertices(dent);
    CHECK(in_Omega(p));
    CHECK_FALSE(is_convex(p));
}
