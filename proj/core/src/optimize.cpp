#include "polyfoil/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "polyfoil/errors.hpp"
#include "polyfoil/inscribable.hpp"
#include "polyfoil/tolerances.hpp"

namespace polyfoil {

namespace {

constexpr double kArmijo = 1e-4;
constexpr double kBacktrack = 0.5;
constexpr int kMaxHalvings = 60;

double inf_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double a : v) m = std::max(m, std::abs(a));
    return m;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Shared ascent driver: maximizes `value` over x with gradient `grad`,
// accepting only feasible iterates.  Step seeding uses the previous
// accepted step (Barzilai-Borwein when the curvature estimate allows).
struct AscentProblem {
    std::function<double(const std::vector<double>&)> value;
    std::function<std::vector<double>(const std::vector<double>&)> grad;
    std::function<bool(const std::vector<double>&)> feasible;
    double scale = 1.0;
};

// Newton iteration on the gradient with a finite-difference Jacobian.
// Used as the endgame once the objective has gone flat in double
// precision: the gradient is still accurate there, the value is not.
bool newton_polish(const AscentProblem& prob, std::vector<double>& x,
                   std::vector<double>& g, double target_gnorm) {
    const std::size_t m = x.size();
    for (int round = 0; round < 8; ++round) {
        const double gn = inf_norm(g);
        if (gn < target_gnorm) return true;

        const double h = 1.5e-8 * prob.scale;
        std::vector<double> jac(m * m);
        std::vector<double> probe = x;
        for (std::size_t j = 0; j < m; ++j) {
            probe[j] = x[j] + h;
            if (!prob.feasible(probe)) return false;
            const std::vector<double> gp = prob.grad(probe);
            probe[j] = x[j] - h;
            if (!prob.feasible(probe)) return false;
            const std::vector<double> gm = prob.grad(probe);
            probe[j] = x[j];
            for (std::size_t i = 0; i < m; ++i)
                jac[i * m + j] = (gp[i] - gm[i]) / (2.0 * h);
        }

        // Solve jac * delta = -g by Gaussian elimination with partial
        // pivoting; the Hessian is definite at the interior optimum.
        std::vector<double> rhs(m);
        for (std::size_t i = 0; i < m; ++i) rhs[i] = -g[i];
        std::vector<std::size_t> perm(m);
        for (std::size_t i = 0; i < m; ++i) perm[i] = i;
        for (std::size_t c = 0; c < m; ++c) {
            std::size_t piv = c;
            for (std::size_t r = c + 1; r < m; ++r)
                if (std::abs(jac[perm[r] * m + c]) > std::abs(jac[perm[piv] * m + c]))
                    piv = r;
            std::swap(perm[c], perm[piv]);
            const double d = jac[perm[c] * m + c];
            if (!(std::abs(d) > 0.0)) return false;
            for (std::size_t r = c + 1; r < m; ++r) {
                const double f = jac[perm[r] * m + c] / d;
                jac[perm[r] * m + c] = 0.0;
                for (std::size_t k = c + 1; k < m; ++k)
                    jac[perm[r] * m + k] -= f * jac[perm[c] * m + k];
                rhs[perm[r]] -= f * rhs[perm[c]];
            }
        }
        std::vector<double> delta(m);
        for (std::size_t ri = m; ri-- > 0;) {
            double s = rhs[perm[ri]];
            for (std::size_t k = ri + 1; k < m; ++k)
                s -= jac[perm[ri] * m + k] * delta[k];
            delta[ri] = s / jac[perm[ri] * m + ri];
        }

        bool moved = false;
        double damp = 1.0;
        for (int half = 0; half < 20 && !moved; ++half, damp *= 0.5) {
            std::vector<double> cand(m);
            for (std::size_t i = 0; i < m; ++i) cand[i] = x[i] + damp * delta[i];
            if (!prob.feasible(cand)) continue;
            std::vector<double> gc = prob.grad(cand);
            if (inf_norm(gc) < gn) {
                x = std::move(cand);
                g = std::move(gc);
                moved = true;
            }
        }
        if (!moved) return inf_norm(g) < target_gnorm;
    }
    return inf_norm(g) < target_gnorm;
}

std::vector<double> run_ascent(const AscentProblem& prob, std::vector<double> x,
                               const AscentOptions& options, const char* op) {
    if (!prob.feasible(x))
        throw domain_error(std::string(op) + ": start point is infeasible");

    std::vector<double> g = prob.grad(x);
    double fx = prob.value(x);
    double step = prob.scale / std::max(inf_norm(g), 1e-30);

    auto finish = [&](const std::vector<double>& point, int iterations) {
        if (options.report) {
            options.report->iterations = iterations;
            options.report->grad_norm = inf_norm(prob.grad(point));
        }
        return point;
    };

    std::vector<double> prev_x, prev_g;
    for (int it = 0; it < options.max_iterations; ++it) {
        const double gnorm = inf_norm(g);
        if (gnorm < options.grad_tolerance * prob.scale) return finish(x, it);

        if (!prev_x.empty()) {
            // BB1 curvature estimate; positive for a locally concave
            // objective along the last displacement.
            std::vector<double> dx(x.size()), dg(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) {
                dx[i] = x[i] - prev_x[i];
                dg[i] = g[i] - prev_g[i];
            }
            const double num = dot(dx, dx);
            const double den = -dot(dx, dg);
            if (den > 0.0 && std::isfinite(num / den)) step = num / den;
        }
        step = std::clamp(step, 1e-12 * prob.scale / gnorm, 1e3 * prob.scale / gnorm);

        const double g2 = dot(g, g);
        bool accepted = false;
        std::vector<double> cand(x.size());
        // First pass insists on the Armijo increase, the second accepts
        // any strict improvement.  Both fail only within rounding
        // distance of the optimum, where the value goes flat in double
        // precision; the endgame then switches to Newton on the gradient,
        // which stays accurate there.
        for (int pass = 0; pass < 2 && !accepted; ++pass) {
            double alpha = step;
            for (int half = 0; half < kMaxHalvings; ++half, alpha *= kBacktrack) {
                for (std::size_t i = 0; i < x.size(); ++i) cand[i] = x[i] + alpha * g[i];
                if (!prob.feasible(cand)) continue;
                const double fc = prob.value(cand);
                const bool good =
                    (pass == 0) ? fc > fx && fc >= fx + kArmijo * alpha * g2 : fc > fx;
                if (!good) continue;
                prev_x = std::move(x);
                prev_g = g;
                x = cand;
                fx = fc;
                g = prob.grad(x);
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            if (newton_polish(prob, x, g, options.grad_tolerance * prob.scale))
                return finish(x, it);
            throw numerical_error(std::string(op) +
                                  ": no feasible ascent step, gradient norm " +
                                  std::to_string(inf_norm(g)));
        }
    }
    throw numerical_error(std::string(op) + ": iteration cap reached, gradient norm " +
                          std::to_string(inf_norm(prob.grad(x))));
}

std::vector<double> slice_to_tuple(const PerimeterSlice& s) {
    std::vector<double> lengths(s.free.size() + 1);
    double t1 = s.L;
    // Sides among the free slots: even indices (the x_k) and the last
    // entry (t_{n-1}); the interior diagonals do not enter the perimeter.
    for (std::size_t i = 0; i < s.free.size(); ++i) {
        const bool side = (i % 2 == 0) || (i + 1 == s.free.size());
        if (side) t1 -= s.free[i];
        lengths[i + 1] = s.free[i];
    }
    lengths[0] = t1;
    return lengths;
}

} // namespace

StarPolygon lift(const PerimeterSlice& slice) {
    if (slice.n < 3 || slice.free.size() != static_cast<std::size_t>(2 * slice.n - 4))
        throw validation_error("lift: slice dimension does not match n");
    std::vector<double> lengths = slice_to_tuple(slice);
    if (!(lengths[0] > 0.0))
        throw domain_error("lift: perimeter constraint forces t_1 <= 0");
    StarPolygon p = star_polygon(std::move(lengths));
    if (!in_Omega(p))
        throw domain_error("lift: lifted tuple is not an admissible star polygon");
    return p;
}

StarPolygon lift(const SideFixedConfig& config) {
    const std::size_t n = config.sides.size();
    if (n < 4 || config.diagonals.size() != n - 3)
        throw validation_error("lift: diagonal count does not match the side count");
    std::vector<double> lengths(2 * n - 3);
    lengths[0] = config.sides[0];
    lengths[2 * n - 4] = config.sides[n - 1];
    for (std::size_t k = 1; k + 1 < n; ++k) lengths[2 * k - 1] = config.sides[k];
    for (std::size_t k = 2; k + 1 < n; ++k) lengths[2 * k - 2] = config.diagonals[k - 2];
    StarPolygon p = star_polygon(std::move(lengths));
    if (!in_Omega(p))
        throw domain_error("lift: configuration is not an admissible star polygon");
    return p;
}

Gradient grad_area_L(const PerimeterSlice& slice) {
    const StarPolygon p = lift(slice);
    const int n = p.n;
    std::vector<TriplePartials> d(n - 1);
    for (int k = 1; k <= n - 2; ++k) d[k] = heron_area_partials(p.triple(k), k);

    Gradient g(slice.free.size(), 0.0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const std::size_t slot = i + 1;
        if (slot == static_cast<std::size_t>(2 * n - 4)) {
            g[i] = -d[1].d1 + d[n - 2].d3; // t_{n-1}
        } else if (slot % 2 == 1) {
            const int k = static_cast<int>((slot + 1) / 2);
            g[i] = -d[1].d1 + d[k].d2;     // x_k
        } else {
            const int k = static_cast<int>(slot / 2 + 1);
            g[i] = d[k - 1].d3 + d[k].d1;  // t_k, 2 <= k <= n-2
        }
    }
    return g;
}

Gradient grad_area_fixed_sides(const SideFixedConfig& config) {
    const StarPolygon p = lift(config);
    const int n = p.n;
    std::vector<TriplePartials> d(n - 1);
    for (int k = 1; k <= n - 2; ++k) d[k] = heron_area_partials(p.triple(k), k);
    Gradient g(config.diagonals.size(), 0.0);
    for (int k = 2; k <= n - 2; ++k) g[k - 2] = d[k - 1].d3 + d[k].d1;
    return g;
}

StarPolygon maximize_area_fixed_perimeter(int n, double L,
                                          const std::optional<PerimeterSlice>& start,
                                          const AscentOptions& options) {
    if (n < 3)
        throw validation_error("maximize_area_fixed_perimeter: need n >= 3");
    if (!(L > 0.0) || !std::isfinite(L))
        throw validation_error("maximize_area_fixed_perimeter: perimeter must be positive");

    PerimeterSlice slice;
    if (start) {
        slice = *start;
        if (slice.n != n || slice.L != L)
            throw validation_error("maximize_area_fixed_perimeter: start does not match n, L");
    } else {
        const StarPolygon reg = regular_polygon(n, L);
        slice.n = n;
        slice.L = L;
        slice.free.assign(reg.lengths.begin() + 1, reg.lengths.end());
        std::mt19937_64 rng(options.seed);
        std::uniform_real_distribution<double> jitter(-0.01, 0.01);
        for (double scale = 1.0; ; scale *= 0.5) {
            PerimeterSlice cand = slice;
            for (double& v : cand.free) v *= 1.0 + scale * jitter(rng);
            try {
                (void)lift(cand);
                slice = cand;
                break;
            } catch (const domain_error&) {
                if (scale < 1e-6)
                    break; // fall back to the exact regular point
            }
        }
    }

    AscentProblem prob;
    prob.scale = L;
    auto to_slice = [n, L](const std::vector<double>& x) {
        return PerimeterSlice{n, L, x};
    };
    prob.value = [&](const std::vector<double>& x) { return area(lift(to_slice(x))); };
    prob.grad = [&](const std::vector<double>& x) { return grad_area_L(to_slice(x)); };
    prob.feasible = [&](const std::vector<double>& x) {
        try {
            (void)lift(to_slice(x));
            return true;
        } catch (const error&) {
            return false;
        }
    };

    const std::vector<double> result =
        run_ascent(prob, slice.free, options, "maximize_area_fixed_perimeter");
    return lift(to_slice(result));
}

StarPolygon maximize_area_fixed_sides(const std::vector<double>& sides,
                                      const std::optional<std::vector<double>>& start,
                                      const AscentOptions& options) {
    const std::size_t n = sides.size();
    if (n < 4)
        throw validation_error("maximize_area_fixed_sides: need n >= 4, a triangle has "
                               "no free diagonals");
    double total = 0.0;
    std::size_t longest = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(sides[i]) || sides[i] <= 0.0)
            throw validation_error("maximize_area_fixed_sides: side " + std::to_string(i + 1) +
                                   " is not a positive finite length");
        total += sides[i];
        if (sides[i] > sides[longest]) longest = i;
    }
    if (!(total - 2.0 * sides[longest] > tol::membership * total))
        throw domain_error("maximize_area_fixed_sides: side " + std::to_string(longest + 1) +
                           " is at least the sum of the others");

    const double scale = total;
    auto to_config = [&sides](const std::vector<double>& diag) {
        return SideFixedConfig{sides, diag};
    };
    auto feasible = [&](const std::vector<double>& diag) {
        try {
            return is_convex(lift(to_config(diag)));
        } catch (const error&) {
            return false;
        }
    };

    std::vector<double> diag;
    if (start) {
        diag = *start;
        if (diag.size() != n - 3)
            throw validation_error("maximize_area_fixed_sides: start has wrong diagonal count");
    } else {
        // Vertices on a circle with central angles proportional to the
        // side lengths; the normalization closes the fan exactly, and the
        // resulting chords seed the diagonals with a convex realization.
        const double R0 = total / (2.0 * std::numbers::pi);
        diag.resize(n - 3);
        double acc = 0.0;
        std::vector<double> psi(n - 1);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            acc += sides[k];
            psi[k] = 2.0 * std::numbers::pi * acc / total;
        }
        for (std::size_t k = 2; k + 1 < n; ++k)
            diag[k - 2] = 2.0 * R0 * std::sin(0.5 * psi[k - 1]);
        if (!feasible(diag)) {
            // Fall back to the cyclic diagonals, displaced so the ascent
            // still has to do the work of finding the critical point.
            const CyclicSolution cyc = solve_cyclic(sides);
            diag = cyc.diagonals;
            std::mt19937_64 rng(options.seed);
            std::uniform_real_distribution<double> jitter(-0.02, 0.02);
            for (double shrink = 1.0; shrink > 1e-4; shrink *= 0.5) {
                std::vector<double> cand = diag;
                for (double& v : cand) v *= 1.0 + shrink * jitter(rng);
                if (feasible(cand)) {
                    diag = cand;
                    break;
                }
            }
        }
    }

    AscentProblem prob;
    prob.scale = scale;
    prob.value = [&](const std::vector<double>& d) { return area(lift(to_config(d))); };
    prob.grad = [&](const std::vector<double>& d) { return grad_area_fixed_sides(to_config(d)); };
    prob.feasible = feasible;

    const std::vector<double> result =
        run_ascent(prob, diag, options, "maximize_area_fixed_sides");
    return lift(to_config(result));
}

} // namespace polyfoil
