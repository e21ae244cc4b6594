#include "polyfoil/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polyfoil/errors.hpp"
#include "polyfoil/inscribable.hpp"
#include "polyfoil/tolerances.hpp"

namespace polyfoil {

namespace {

void require_omega(const StarPolygon& p, const char* op) {
    if (!in_Omega(p))
        throw domain_error(std::string(op) + ": tuple is not an admissible star polygon");
}

// Order-canonical summation: the result depends only on the multiset of
// addends, so the functionals are bit-exact under tuple reversal and,
// for triangles, under side permutations.
double sorted_sum(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    double sum = 0.0;
    for (double a : v) sum += a;
    return sum;
}

} // namespace

double perimeter(const StarPolygon& p) {
    require_omega(p, "perimeter");
    std::vector<double> terms;
    terms.reserve(p.n);
    terms.push_back(p.lengths.front());
    terms.push_back(p.lengths.back());
    for (int k = 1; k <= p.n - 2; ++k) terms.push_back(p.side(k));
    return sorted_sum(std::move(terms));
}

double area(const StarPolygon& p) {
    require_omega(p, "area");
    std::vector<double> terms;
    terms.reserve(p.n - 2);
    for (int k = 1; k <= p.n - 2; ++k) terms.push_back(heron_area(p.triple(k)));
    return sorted_sum(std::move(terms));
}

PsiValue psi(const StarPolygon& p) { return {perimeter(p), area(p)}; }

Gradient grad_perimeter(const StarPolygon& p) {
    require_omega(p, "grad_perimeter");
    Gradient g(p.lengths.size(), 0.0);
    g.front() = 1.0;
    g.back() = 1.0;
    for (int k = 1; k <= p.n - 2; ++k) g[2 * k - 1] = 1.0;
    return g;
}

TriplePartials heron_area_partials(const TriangleTriple& tr, int triangle_index) {
    const double a = tr.t, b = tr.x, c = tr.s;
    double hi = a, mid = b, lo = c;
    if (hi < mid) std::swap(hi, mid);
    if (mid < lo) std::swap(mid, lo);
    if (hi < mid) std::swap(hi, mid);
    const double f =
        (hi + (mid + lo)) * (lo - (hi - mid)) * (lo + (hi - mid)) * (hi + (mid - lo));
    const double scale = hi;
    if (!(f > tol::membership * scale * scale * scale * scale))
        throw conditioning_error("heron_area_partials: fan triangle " +
                                 std::to_string(triangle_index) +
                                 " is too close to degenerate");
    const double g = 2.0 * std::sqrt(f);
    return {a * (-a * a + b * b + c * c) / g,
            b * (a * a - b * b + c * c) / g,
            c * (a * a + b * b - c * c) / g};
}

Gradient grad_area(const StarPolygon& p) {
    require_omega(p, "grad_area");
    Gradient g(p.lengths.size(), 0.0);
    for (int k = 1; k <= p.n - 2; ++k) {
        const TriplePartials d = heron_area_partials(p.triple(k), k);
        g[2 * k - 2] += d.d1; // t_k
        g[2 * k - 1] += d.d2; // x_k
        g[2 * k] += d.d3;     // t_{k+1}
    }
    return g;
}

RankReport classify_rank(const StarPolygon& p) {
    const Gradient gp = grad_perimeter(p);
    const Gradient ga = grad_area(p);
    Matrix jac(2, gp.size());
    for (std::size_t j = 0; j < gp.size(); ++j) {
        jac(0, j) = gp[j];
        jac(1, j) = ga[j];
    }
    const auto sv = singular_values(jac);

    RankReport report;
    report.sigma1 = sv[0];
    report.sigma2 = sv[1];
    report.rank = (sv[1] > tol::rank_ratio * sv[0]) ? 2 : 1;

    // Direct geometric test: equilateral and concyclic.
    double lo = p.lengths.front(), hi = p.lengths.front();
    auto consider = [&](double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    };
    consider(p.lengths.back());
    for (int k = 1; k <= p.n - 2; ++k) consider(p.side(k));
    const bool equilateral = (hi - lo) <= 1e-9 * hi;

    bool concyclic = true;
    const GammaValue gv = gamma(p);
    const double len_max = *std::max_element(p.lengths.begin(), p.lengths.end());
    const double gamma_scale = len_max * len_max * len_max * len_max;
    for (double c : gv.components)
        concyclic = concyclic && std::abs(c) < tol::cyclic * gamma_scale;

    report.is_regular_polygon = equilateral && concyclic;
    return report;
}

Gradient finite_diff_gradient(const std::function<double(const StarPolygon&)>& f,
                              const StarPolygon& p, double step) {
    require_omega(p, "finite_diff_gradient");
    if (!(step > 0.0))
        throw validation_error("finite_diff_gradient: step must be positive");
    Gradient g(p.lengths.size(), 0.0);
    StarPolygon probe = p;
    for (std::size_t i = 0; i < p.lengths.size(); ++i) {
        probe.lengths[i] = p.lengths[i] + step;
        if (!in_Omega(probe))
            throw domain_error("finite_diff_gradient: step too large, probe leaves the domain");
        const double hi = f(probe);
        probe.lengths[i] = p.lengths[i] - step;
        if (!in_Omega(probe))
            throw domain_error("finite_diff_gradient: step too large, probe leaves the domain");
        const double lo = f(probe);
        probe.lengths[i] = p.lengths[i];
        g[i] = (hi - lo) / (2.0 * step);
    }
    return g;
}

std::vector<double>
finite_diff_gradient_vec(const std::function<double(const std::vector<double>&)>& f,
                         const std::vector<double>& x, double step,
                         const std::function<bool(const std::vector<double>&)>& feasible) {
    if (!(step > 0.0))
        throw validation_error("finite_diff_gradient_vec: step must be positive");
    std::vector<double> g(x.size(), 0.0);
    std::vector<double> probe = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        probe[i] = x[i] + step;
        if (feasible && !feasible(probe))
            throw domain_error("finite_diff_gradient_vec: step too large, probe infeasible");
        const double hi = f(probe);
        probe[i] = x[i] - step;
        if (feasible && !feasible(probe))
            throw domain_error("finite_diff_gradient_vec: step too large, probe infeasible");
        const double lo = f(probe);
        probe[i] = x[i];
        g[i] = (hi - lo) / (2.0 * step);
    }
    return g;
}

} // namespace polyfoil
