#include "polyfoil/foliation.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "polyfoil/errors.hpp"

namespace polyfoil {

namespace {

// Corrector target: push the scaled residual down to near machine
// precision so accepted samples conserve both invariants far inside the
// leaf bound.
constexpr double kCorrectorGoal = 1e-13;
constexpr int kCorrectorIters = 50;

// Scaled conservation residual of omega against the target.
std::array<double, 2> leaf_residual(const StarPolygon& p, const PsiValue& target) {
    const PsiValue v = psi(p);
    return {(v.perimeter - target.perimeter) / target.perimeter,
            (v.area - target.area) / target.area};
}

// One Gauss-Newton projection onto the leaf.  Rows of the Jacobian are
// scaled like the residual; the minimum-norm update solves the 2x2
// normal system.  Returns false when damping cannot reduce the residual.
bool correct_onto_leaf(StarPolygon& p, const PsiValue& target, double leaf_tol) {
    for (int it = 0; it < kCorrectorIters; ++it) {
        const auto r = leaf_residual(p, target);
        const double rn = std::max(std::abs(r[0]), std::abs(r[1]));
        if (rn < kCorrectorGoal) return true;

        const Gradient gp = grad_perimeter(p);
        const Gradient ga = grad_area(p);
        const std::size_t m = gp.size();
        std::vector<double> j0(m), j1(m);
        for (std::size_t i = 0; i < m; ++i) {
            j0[i] = gp[i] / target.perimeter;
            j1[i] = ga[i] / target.area;
        }
        double a = 0.0, b = 0.0, c = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            a += j0[i] * j0[i];
            b += j0[i] * j1[i];
            c += j1[i] * j1[i];
        }
        const double det = a * c - b * b;
        if (!(det > 0.0) || !std::isfinite(det)) return false;
        // lambda = (J J^T)^{-1} (-r), delta = J^T lambda
        const double l0 = (-r[0] * c + r[1] * b) / det;
        const double l1 = (r[0] * b - r[1] * a) / det;

        double damp = 1.0;
        bool improved = false;
        for (int half = 0; half < 25 && !improved; ++half, damp *= 0.5) {
            StarPolygon cand = p;
            for (std::size_t i = 0; i < m; ++i)
                cand.lengths[i] += damp * (j0[i] * l0 + j1[i] * l1);
            if (!in_Omega(cand)) continue;
            const auto rc = leaf_residual(cand, target);
            if (std::max(std::abs(rc[0]), std::abs(rc[1])) < rn) {
                p = std::move(cand);
                improved = true;
            }
        }
        if (!improved) return false;
    }
    return std::max(std::abs(leaf_residual(p, target)[0]),
                    std::abs(leaf_residual(p, target)[1])) < leaf_tol;
}

// Unit tangent to the leaf at p.  For triangles this is the cross
// product of the two gradients; in higher dimension a seeded random
// direction is projected onto the tangent space.
std::vector<double> leaf_tangent(const StarPolygon& p, std::mt19937_64& rng) {
    const Gradient gp = grad_perimeter(p);
    const Gradient ga = grad_area(p);
    const std::size_t m = gp.size();
    std::vector<double> t(m);
    if (m == 3) {
        t[0] = gp[1] * ga[2] - gp[2] * ga[1];
        t[1] = gp[2] * ga[0] - gp[0] * ga[2];
        t[2] = gp[0] * ga[1] - gp[1] * ga[0];
    } else {
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (double& v : t) v = gauss(rng);
        double a = 0.0, b = 0.0, c = 0.0, va = 0.0, vb = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            a += gp[i] * gp[i];
            b += gp[i] * ga[i];
            c += ga[i] * ga[i];
            va += gp[i] * t[i];
            vb += ga[i] * t[i];
        }
        const double det = a * c - b * b;
        const double l0 = (c * va - b * vb) / det;
        const double l1 = (a * vb - b * va) / det;
        for (std::size_t i = 0; i < m; ++i) t[i] -= l0 * gp[i] + l1 * ga[i];
    }
    double nrm = 0.0;
    for (double v : t) nrm += v * v;
    nrm = std::sqrt(nrm);
    if (!(nrm > 0.0))
        throw numerical_error("trace_leaf: degenerate tangent direction");
    for (double& v : t) v /= nrm;
    return t;
}

} // namespace

StarPolygon triangle_to_tuple(const TrianglePoint& tp) {
    return star_polygon({tp.x, tp.z, tp.y});
}

TrianglePoint tuple_to_triangle(const StarPolygon& p) {
    if (p.n != 3)
        throw validation_error("tuple_to_triangle: polygon is not a triangle");
    return {p.lengths[0], p.lengths[2], p.lengths[1]};
}

double phi(const TrianglePoint& tp) {
    if (!in_V({tp.x, tp.y, tp.z}))
        throw domain_error("phi: sides do not form a nondegenerate triangle");
    return (tp.x + tp.y + tp.z) * (-tp.x + tp.y + tp.z) * (tp.x - tp.y + tp.z) *
           (tp.x + tp.y - tp.z) / 16.0;
}

std::array<double, 3> phi_gradient(const TrianglePoint& tp) {
    const double p = tp.x + tp.y + tp.z;
    const double q = -tp.x + tp.y + tp.z;
    const double r = tp.x - tp.y + tp.z;
    const double s = tp.x + tp.y - tp.z;
    return {q * r * s - p * r * s + p * q * s + p * q * r,
            q * r * s + p * r * s - p * q * s + p * q * r,
            q * r * s + p * r * s + p * q * s - p * q * r};
}

LeafTrace trace_leaf(const StarPolygon& start, double step, int max_samples,
                     std::uint64_t seed, double leaf_tol) {
    if (!in_Omega(start))
        throw domain_error("trace_leaf: start is not an admissible star polygon");
    if (!(step > 0.0))
        throw validation_error("trace_leaf: step must be positive");
    if (max_samples < 1)
        throw validation_error("trace_leaf: max_samples must be at least 1");
    if (!(leaf_tol > 0.0))
        throw validation_error("trace_leaf: leaf tolerance must be positive");
    if (classify_rank(start).rank != 2)
        throw domain_error("trace_leaf: singular leaf, start is a regular polygon");

    LeafTrace trace;
    trace.target = psi(start);

    std::mt19937_64 rng(seed);
    const bool curve = (start.n == 3);

    StarPolygon current = start;
    trace.samples.push_back(current);
    trace.arc_steps.push_back(0.0);
    trace.converged.push_back(true);

    std::vector<double> prev_tangent;
    for (int k = 1; k < max_samples; ++k) {
        std::vector<double> tangent = leaf_tangent(current, rng);
        if (curve && !prev_tangent.empty()) {
            double d = 0.0;
            for (std::size_t i = 0; i < tangent.size(); ++i) d += tangent[i] * prev_tangent[i];
            if (d < 0.0)
                for (double& v : tangent) v = -v;
        }

        StarPolygon next = current;
        for (std::size_t i = 0; i < tangent.size(); ++i)
            next.lengths[i] += step * tangent[i];
        if (!in_Omega(next)) {
            trace.stop = TraceStop::left_domain;
            return trace;
        }
        if (!correct_onto_leaf(next, trace.target, leaf_tol)) {
            const auto r = leaf_residual(next, trace.target);
            throw numerical_error("trace_leaf: corrector diverged, residual (" +
                                  std::to_string(r[0]) + ", " + std::to_string(r[1]) + ")");
        }

        current = next;
        prev_tangent = std::move(tangent);
        trace.samples.push_back(current);
        trace.arc_steps.push_back(step);
        const auto r = leaf_residual(current, trace.target);
        trace.converged.push_back(std::max(std::abs(r[0]), std::abs(r[1])) < leaf_tol);

        if (curve && k >= 10) {
            double dist = 0.0;
            for (std::size_t i = 0; i < current.lengths.size(); ++i)
                dist = std::max(dist, std::abs(current.lengths[i] - start.lengths[i]));
            if (dist < 0.5 * step) {
                trace.closed_loop = true;
                trace.stop = TraceStop::closed_loop;
                return trace;
            }
        }
    }
    trace.stop = TraceStop::max_samples;
    return trace;
}

std::pair<TrianglePoint, TrianglePoint> isosceles_equal_pair(double lambda) {
    return isosceles_equal_pair(lambda, 3.0 * lambda * lambda / (7.0 * std::sqrt(7.0)));
}

std::pair<TrianglePoint, TrianglePoint> isosceles_equal_pair(double lambda, double a0) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw validation_error("isosceles_equal_pair: semiperimeter must be positive");
    const double phi_max = lambda * lambda * lambda * lambda / 27.0;
    if (!(a0 > 0.0))
        throw domain_error("isosceles_equal_pair: area target must be positive");
    const double phi_target = a0 * a0;
    if (!(phi_target < phi_max))
        throw domain_error("isosceles_equal_pair: area target reaches or exceeds the "
                           "equilateral maximum");

    // Squared area of <x,x,2(lambda-x)> as a cubic in x, increasing on
    // (lambda/2, 2*lambda/3) and decreasing on (2*lambda/3, lambda).
    auto phi_iso = [lambda](double x) {
        return lambda * (lambda - x) * (lambda - x) * (2.0 * x - lambda);
    };
    auto bisect = [&](double lo, double hi, bool increasing) {
        for (int it = 0; it < 200 && (hi - lo) > 1e-17 * lambda; ++it) {
            const double mid = 0.5 * (lo + hi);
            const bool below = phi_iso(mid) < phi_target;
            if (below == increasing)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    };

    const double x_peak = 2.0 * lambda / 3.0;
    const double x_hi = bisect(x_peak, lambda, false);
    const double x_lo = bisect(0.5 * lambda, x_peak, true);
    const TrianglePoint first = {x_hi, x_hi, 2.0 * (lambda - x_hi)};
    const TrianglePoint second = {x_lo, x_lo, 2.0 * (lambda - x_lo)};
    return {first, second};
}

std::vector<TrianglePoint> plaque_sample(double lambda, int grid) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw validation_error("plaque_sample: lambda must be positive");
    if (grid < 2)
        throw validation_error("plaque_sample: grid must be at least 2");
    std::vector<TrianglePoint> pts;
    for (int i = 1; i < grid; ++i) {
        for (int j = 1; j < grid - i; ++j) {
            const int k = grid - i - j;
            const double x = lambda * static_cast<double>(j + k) / grid;
            const double y = lambda * static_cast<double>(i + k) / grid;
            // Exact plane membership: x + y lies in [lambda, 2*lambda],
            // so the subtraction below is exact and (x + y) + z == 2*lambda.
            const double z = 2.0 * lambda - (x + y);
            pts.push_back({x, y, z});
        }
    }
    return pts;
}

} // namespace polyfoil
