#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include <polyfoil/calculus.hpp>
#include <polyfoil/errors.hpp>
#include <polyfoil/inscribable.hpp>
#include <polyfoil/polygon.hpp>

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace polyfoil;
using testsupport::rel_err;

namespace {

StarPolygon unit_square() { return star_polygon({1, 1, std::sqrt(2.0), 1, 1}); }

double inf_norm(const Gradient& g) {
    double m = 0.0;
    for (double v : g) m = std::max(m, std::abs(v));
    return m;
}

// Second analytic route to the area gradient: logarithmic derivative of
// the Heron radicand, assembled per fan triangle.
Gradient grad_area_log_form(const StarPolygon& p) {
    Gradient g(p.lengths.size(), 0.0);
    for (int k = 1; k <= p.n - 2; ++k) {
        const TriangleTriple tr = p.triple(k);
        const double s = tr.t + tr.x + tr.s;
        const double f = s * (s - 2 * tr.t) * (s - 2 * tr.x) * (s - 2 * tr.s);
        const double w = std::sqrt(f) / 8.0;
        const double base = 1.0 / s;
        const double dt = w * (base - 1.0 / (s - 2 * tr.t) + 1.0 / (s - 2 * tr.x) +
                               1.0 / (s - 2 * tr.s));
        const double dx = w * (base + 1.0 / (s - 2 * tr.t) - 1.0 / (s - 2 * tr.x) +
                               1.0 / (s - 2 * tr.s));
        const double ds = w * (base + 1.0 / (s - 2 * tr.t) + 1.0 / (s - 2 * tr.x) -
                               1.0 / (s - 2 * tr.s));
        g[2 * k - 2] += dt;
        g[2 * k - 1] += dx;
        g[2 * k] += ds;
    }
    return g;
}

} // namespace

TEST_CASE("perimeter counts boundary slots only") {
    CHECK(perimeter(star_polygon({11, 6, 11})) == doctest::Approx(28.0).epsilon(1e-15));
    CHECK(perimeter(unit_square()) == doctest::Approx(4.0).epsilon(1e-15));

    // Interior diagonal does not contribute.
    StarPolygon sq = unit_square();
    sq.lengths[2] = 1.5;
    CHECK(in_Omega(sq));
    CHECK(perimeter(sq) == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("area of reference polygons") {
    CHECK(area(star_polygon({11, 6, 11})) ==
          doctest::Approx(12.0 * std::sqrt(7.0)).epsilon(1e-14));
    CHECK(area(star_polygon({8, 12, 8})) ==
          doctest::Approx(12.0 * std::sqrt(7.0)).epsilon(1e-14));
    CHECK(area(unit_square()) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("joint map on the matched isosceles pair") {
    const PsiValue a = psi(star_polygon({11, 6, 11}));
    const PsiValue b = psi(star_polygon({8, 12, 8}));
    CHECK(rel_err(a.perimeter, 28.0) < 1e-14);
    CHECK(rel_err(b.perimeter, 28.0) < 1e-14);
    CHECK(rel_err(a.area, 12.0 * std::sqrt(7.0)) < 1e-14);
    CHECK(rel_err(b.area, 12.0 * std::sqrt(7.0)) < 1e-14);
}

TEST_CASE("perimeter gradient pattern") {
    CHECK(grad_perimeter(star_polygon({1, 1, 1})) == Gradient{1, 1, 1});
    CHECK(grad_perimeter(unit_square()) == Gradient{1, 1, 0, 1, 1});
    const StarPolygon pent = regular_polygon(5, 5);
    CHECK(grad_perimeter(pent) == Gradient{1, 1, 0, 1, 0, 1, 1});
}

TEST_CASE("area gradient on reference triangles") {
    SUBCASE("equilateral") {
        const Gradient g = grad_area(star_polygon({1, 1, 1}));
        const double want = 1.0 / (2.0 * std::sqrt(3.0));
        for (double v : g) CHECK(v == doctest::Approx(want).epsilon(1e-13));
    }
    SUBCASE("right triangle against finite differences") {
        const StarPolygon p = star_polygon({3, 4, 5});
        const Gradient g = grad_area(p);
        const Gradient fd = finite_diff_gradient([](const StarPolygon& q) { return area(q); },
                                                 p, 1e-6);
        for (std::size_t i = 0; i < g.size(); ++i)
            CHECK(rel_err(g[i], fd[i]) < 1e-6);
    }
}

TEST_CASE("area gradient matches finite differences on random polygons") {
    std::mt19937_64 rng(21);
    for (int n = 3; n <= 10; ++n) {
        for (int rep = 0; rep < 25; ++rep) {
            const StarPolygon p = testsupport::random_star_polygon(n, rng);
            const double scale = *std::max_element(p.lengths.begin(), p.lengths.end());
            const Gradient g = grad_area(p);
            const Gradient fd = finite_diff_gradient(
                [](const StarPolygon& q) { return area(q); }, p, 1e-6 * scale);
            double err = 0.0;
            for (std::size_t i = 0; i < g.size(); ++i)
                err = std::max(err, std::abs(g[i] - fd[i]));
            CHECK(err / inf_norm(g) < 1e-5);
        }
    }
}

TEST_CASE("area gradient agrees with the logarithmic-derivative form") {
    std::mt19937_64 rng(22);
    for (int n = 3; n <= 10; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
            const StarPolygon p = testsupport::random_star_polygon(n, rng);
            const Gradient g = grad_area(p);
            const Gradient h = grad_area_log_form(p);
            for (std::size_t i = 0; i < g.size(); ++i)
                CHECK(std::abs(g[i] - h[i]) < 1e-10 * std::max(1.0, inf_norm(g)));
        }
    }
}

TEST_CASE("euler identities from homogeneity") {
    std::mt19937_64 rng(23);
    for (int n = 3; n <= 10; ++n) {
        const StarPolygon p = testsupport::random_star_polygon(n, rng);
        const Gradient gp = grad_perimeter(p);
        const Gradient ga = grad_area(p);
        double dp = 0.0, da = 0.0;
        for (std::size_t i = 0; i < p.lengths.size(); ++i) {
            dp += gp[i] * p.lengths[i];
            da += ga[i] * p.lengths[i];
        }
        CHECK(rel_err(dp, perimeter(p)) < 1e-10);
        CHECK(rel_err(da, 2.0 * area(p)) < 1e-10);
    }
}

TEST_CASE("joint map is exactly invariant under tuple reversal") {
    std::mt19937_64 rng(24);
    for (int n = 3; n <= 10; ++n) {
        const StarPolygon p = testsupport::random_star_polygon(n, rng);
        StarPolygon r = p;
        std::reverse(r.lengths.begin(), r.lengths.end());
        REQUIRE(in_Omega(r));
        CHECK(perimeter(r) == perimeter(p));
        CHECK(area(r) == area(p));
    }
}

TEST_CASE("joint map scales with degrees one and two") {
    std::mt19937_64 rng(25);
    for (int n = 3; n <= 8; ++n) {
        const StarPolygon p = testsupport::random_star_polygon(n, rng);
        for (double lam : {0.5, 2.0, 10.0}) {
            StarPolygon s = p;
            for (double& v : s.lengths) v *= lam;
            CHECK(rel_err(perimeter(s), lam * perimeter(p)) < 1e-12);
            CHECK(rel_err(area(s), lam * lam * area(p)) < 1e-12);
        }
    }
}

TEST_CASE("rank classification") {
    SUBCASE("regular polygons are rank one") {
        for (int n = 3; n <= 12; ++n) {
            const RankReport r = classify_rank(regular_polygon(n, static_cast<double>(n)));
            CHECK(r.rank == 1);
            CHECK(r.is_regular_polygon);
            CHECK(r.sigma2 / r.sigma1 < 1e-7);
        }
    }
    SUBCASE("non-equilateral triangle is rank two") {
        const RankReport r = classify_rank(star_polygon({11, 6, 11}));
        CHECK(r.rank == 2);
        CHECK_FALSE(r.is_regular_polygon);
    }
    SUBCASE("perturbed regular hexagon is rank two") {
        StarPolygon p = regular_polygon(6, 6);
        p.lengths[1] += 1e-3;
        REQUIRE(in_Omega(p));
        const RankReport r = classify_rank(p);
        CHECK(r.rank == 2);
        CHECK_FALSE(r.is_regular_polygon);
        CHECK(r.sigma2 / r.sigma1 > 1e-5);
    }
    SUBCASE("two unequal consecutive sides force rank two") {
        std::mt19937_64 rng(26);
        for (int n = 3; n <= 10; ++n) {
            const StarPolygon p = testsupport::random_star_polygon(n, rng);
            bool unequal = false;
            const double t1 = p.lengths.front();
            if (std::abs(t1 - p.side(1)) > 1e-6 * t1) unequal = true;
            if (unequal) CHECK(classify_rank(p).rank == 2);
        }
    }
}

TEST_CASE("finite differences recover the perimeter pattern") {
    const StarPolygon p = unit_square();
    const Gradient fd = finite_diff_gradient(
        [](const StarPolygon& q) { return perimeter(q); }, p, 1e-7);
    const Gradient want{1, 1, 0, 1, 1};
    for (std::size_t i = 0; i < fd.size(); ++i)
        CHECK(fd[i] == doctest::Approx(want[i]).epsilon(1e-9));
}

TEST_CASE("finite differences refuse steps that leave the domain") {
    const StarPolygon p = unit_square();
    CHECK_THROWS_AS((void)finite_diff_gradient(
                        [](const StarPolygon& q) { return area(q); }, p, 10.0),
                    domain_error);
}

TEST_CASE("gradient of a near-degenerate fan triangle is refused") {
    // A needle with one vanishing ray passes the membership margin but
    // its Heron radicand is below the conditioning bound.
    const StarPolygon p = star_polygon({2e-9, 1.0, 1.0});
    REQUIRE(in_Omega(p));
    CHECK_THROWS_AS((void)grad_area(p), conditioning_error);
}
