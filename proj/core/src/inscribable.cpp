#include "polyfoil/inscribable.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "polyfoil/errors.hpp"
#include "polyfoil/tolerances.hpp"

namespace polyfoil {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxBisection = 200;
constexpr double kAngleTol = 1e-13;

void require_omega(const StarPolygon& p, const char* op) {
    if (!in_Omega(p))
        throw domain_error(std::string(op) + ": tuple is not an admissible star polygon");
}

// Central angle subtended by a chord of length u at radius R.
double chord_angle(double u, double R) {
    return 2.0 * std::asin(std::min(1.0, u / (2.0 * R)));
}

} // namespace

double theta(double u1, double u2, double u3, double u4, double u5) {
    return u1 * u2 * (u4 * u4 + u5 * u5 - u3 * u3) +
           u4 * u5 * (u1 * u1 + u2 * u2 - u3 * u3);
}

GammaValue gamma(const StarPolygon& p) {
    require_omega(p, "gamma");
    GammaValue g;
    if (p.n < 4) return g;
    g.components.resize(p.n - 3);
    const auto& L = p.lengths;
    for (int k = 0; k < p.n - 3; ++k)
        g.components[k] =
            theta(L[2 * k], L[2 * k + 1], L[2 * k + 2], L[2 * k + 3], L[2 * k + 4]);
    return g;
}

bool is_inscribable(const StarPolygon& p, double tolerance) {
    require_omega(p, "is_inscribable");
    if (!is_convex(p))
        throw domain_error("is_inscribable: polygon is not convex");
    const GammaValue g = gamma(p);
    const double len = *std::max_element(p.lengths.begin(), p.lengths.end());
    const double scale = len * len * len * len;
    for (double c : g.components)
        if (!(std::abs(c) < tolerance * scale)) return false;
    return true;
}

Matrix gamma_jacobian(const StarPolygon& p) {
    require_omega(p, "gamma_jacobian");
    if (p.n < 4)
        throw domain_error("gamma_jacobian: defined for n >= 4");
    const auto& L = p.lengths;
    Matrix jac(p.n - 3, L.size());
    for (int k = 0; k < p.n - 3; ++k) {
        const double u1 = L[2 * k], u2 = L[2 * k + 1], u3 = L[2 * k + 2],
                     u4 = L[2 * k + 3], u5 = L[2 * k + 4];
        const double head = u4 * u4 + u5 * u5 - u3 * u3;
        const double tail = u1 * u1 + u2 * u2 - u3 * u3;
        jac(k, 2 * k) = u2 * head + 2.0 * u1 * u4 * u5;
        jac(k, 2 * k + 1) = u1 * head + 2.0 * u2 * u4 * u5;
        jac(k, 2 * k + 2) = -2.0 * u3 * (u1 * u2 + u4 * u5);
        jac(k, 2 * k + 3) = 2.0 * u4 * u1 * u2 + u5 * tail;
        jac(k, 2 * k + 4) = 2.0 * u5 * u1 * u2 + u4 * tail;
    }
    return jac;
}

CyclicSolution solve_cyclic(const std::vector<double>& sides) {
    const std::size_t n = sides.size();
    if (n < 3)
        throw validation_error("solve_cyclic: need at least 3 sides");
    double total = 0.0;
    std::size_t longest = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(sides[i]) || sides[i] <= 0.0)
            throw validation_error("solve_cyclic: side " + std::to_string(i + 1) +
                                   " is not a positive finite length");
        total += sides[i];
        if (sides[i] > sides[longest]) longest = i;
    }
    const double u_max = sides[longest];
    if (!(total - 2.0 * u_max > tol::membership * total))
        throw domain_error("solve_cyclic: side " + std::to_string(longest + 1) +
                           " is at least the sum of the others");

    const double r_min = 0.5 * u_max;

    // Central angle sum at the smallest conceivable radius decides where
    // the circumcenter sits relative to the longest side.
    double sum_min = 0.0;
    for (double u : sides) sum_min += chord_angle(u, r_min);

    const bool center_inside = sum_min >= 2.0 * kPi - kAngleTol;

    // Residual whose root is the circumradius: angle surplus over 2*pi
    // when the center is inside (decreasing in R), otherwise the short
    // chords' angles minus the longest chord's (climbing through zero).
    auto residual = [&](double R) {
        if (center_inside) {
            double s = 0.0;
            for (double u : sides) s += chord_angle(u, R);
            return s - 2.0 * kPi;
        }
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            if (i != longest) s += chord_angle(sides[i], R);
        return s - chord_angle(u_max, R);
    };

    double R = r_min;
    const double f_min = residual(r_min);
    if (center_inside && std::abs(f_min) <= kAngleTol) {
        // Longest side is a diameter.
        R = r_min;
    } else {
        double lo = r_min, f_lo = f_min;
        if (center_inside && f_lo < 0.0)
            throw numerical_error("solve_cyclic: inconsistent bracket at R_min");
        double hi = r_min;
        double f_hi = f_lo;
        int grow = 0;
        // Case with the center inside has residual -> -2*pi as R grows;
        // otherwise it climbs toward (sum - 2*u_max)/(2R) > 0.
        const double want = center_inside ? -1.0 : +1.0;
        while (want * f_hi <= 0.0) {
            hi *= 2.0;
            f_hi = residual(hi);
            if (++grow > kMaxBisection)
                throw numerical_error("solve_cyclic: failed to bracket the circumradius");
        }
        for (int it = 0; it < kMaxBisection; ++it) {
            R = 0.5 * (lo + hi);
            const double f = residual(R);
            if (std::abs(f) < kAngleTol || (hi - lo) < 1e-16 * hi) break;
            const bool go_right = center_inside ? (f > 0.0) : (f < 0.0);
            if (go_right)
                lo = R;
            else
                hi = R;
        }
    }

    // Angular positions of the vertices reached after each side; the
    // longest side steps backwards when the center lies beyond it.
    std::vector<double> psi(n, 0.0); // psi[k] = position after k+1 sides
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double step = chord_angle(sides[i], R);
        acc += (!center_inside && i == longest) ? -step : step;
        psi[i] = acc;
    }

    CyclicSolution sol;
    sol.circumradius = R;
    sol.center_inside = center_inside;

    std::vector<double> lengths(2 * n - 3);
    lengths[0] = sides[0];               // t_1
    lengths[2 * n - 4] = sides[n - 1];   // t_{n-1}
    for (std::size_t k = 1; k + 1 < n; ++k)
        lengths[2 * k - 1] = sides[k];   // x_k
    for (std::size_t k = 2; k + 1 < n; ++k) {
        const double d = 2.0 * R * std::abs(std::sin(0.5 * psi[k - 1]));
        lengths[2 * k - 2] = d;          // t_k
        sol.diagonals.push_back(d);
    }

    sol.polygon = star_polygon(std::move(lengths));
    if (!in_Omega(sol.polygon))
        throw numerical_error("solve_cyclic: reconstructed polygon left the admissible set");
    return sol;
}

StarPolygon regular_polygon(int n, double L) {
    if (n < 3)
        throw validation_error("regular_polygon: need n >= 3");
    if (!(L > 0.0) || !std::isfinite(L))
        throw validation_error("regular_polygon: perimeter must be positive");
    const double side = L / n;
    const double R = side / (2.0 * std::sin(kPi / n));
    std::vector<double> lengths(2 * n - 3);
    for (int k = 1; k <= n - 1; ++k)
        lengths[2 * k - 2] = 2.0 * R * std::sin(k * kPi / n); // t_k
    for (int k = 1; k <= n - 2; ++k)
        lengths[2 * k - 1] = side;                            // x_k
    lengths[0] = side;
    lengths[2 * n - 4] = side;
    return star_polygon(std::move(lengths));
}

} // namespace polyfoil
