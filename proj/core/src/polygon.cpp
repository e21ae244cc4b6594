#include "polyfoil/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "polyfoil/errors.hpp"
#include "polyfoil/tolerances.hpp"

namespace polyfoil {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_valid_triple(const TriangleTriple& tr, const char* op) {
    if (!std::isfinite(tr.t) || !std::isfinite(tr.x) || !std::isfinite(tr.s))
        throw validation_error(std::string(op) + ": non-finite triangle length");
    if (tr.t <= 0.0 || tr.x <= 0.0 || tr.s <= 0.0)
        throw validation_error(std::string(op) + ": non-positive triangle length");
}

double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
double norm(const Vec2& a) { return std::hypot(a.x, a.y); }

} // namespace

StarPolygon star_polygon(std::vector<double> lengths) {
    const std::size_t m = lengths.size();
    if (m < 3 || m % 2 == 0)
        throw validation_error("star_polygon: tuple must have odd length 2n-3 >= 3, got " +
                               std::to_string(m));
    StarPolygon p;
    p.n = static_cast<int>((m + 3) / 2);
    p.lengths = std::move(lengths);
    return p;
}

bool in_V(const TriangleTriple& tr) {
    require_valid_triple(tr, "in_V");
    const double scale = std::max({tr.t, tr.x, tr.s});
    const double margin = tol::membership * scale;
    return tr.t > margin && tr.x > margin && tr.s > margin &&
           (tr.x + tr.s - tr.t) > margin &&
           (tr.t + tr.s - tr.x) > margin &&
           (tr.t + tr.x - tr.s) > margin;
}

double heron_area(const TriangleTriple& tr) {
    if (!in_V(tr))
        throw domain_error("heron_area: lengths do not form a nondegenerate triangle");
    // Sorted evaluation: exact under side permutations and stable for
    // needle-like triangles.
    double a = tr.t, b = tr.x, c = tr.s;
    if (a < b) std::swap(a, b);
    if (b < c) std::swap(b, c);
    if (a < b) std::swap(a, b);
    const double f = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
    return 0.25 * std::sqrt(f);
}

double apex_angle(const TriangleTriple& tr) {
    if (!in_V(tr))
        throw domain_error("apex_angle: lengths do not form a nondegenerate triangle");
    const double c = (tr.t * tr.t + tr.s * tr.s - tr.x * tr.x) / (2.0 * tr.t * tr.s);
    return std::acos(std::clamp(c, -1.0, 1.0));
}

bool in_Omega(const StarPolygon& p) {
    const std::size_t m = p.lengths.size();
    if (m < 3 || m % 2 == 0 || p.n < 3 || m != static_cast<std::size_t>(2 * p.n - 3))
        throw validation_error("in_Omega: tuple length " + std::to_string(m) +
                               " does not match 2n-3 for n=" + std::to_string(p.n));
    for (double v : p.lengths) {
        if (!std::isfinite(v))
            throw validation_error("in_Omega: non-finite tuple entry");
        if (v <= 0.0) return false;
    }
    double angle_sum = 0.0;
    for (int k = 1; k <= p.n - 2; ++k) {
        const TriangleTriple tr = p.triple(k);
        if (!in_V(tr)) return false;
        angle_sum += apex_angle(tr);
    }
    return angle_sum < kTwoPi - tol::membership;
}

VertexChain to_vertices(const StarPolygon& p) {
    if (!in_Omega(p))
        throw domain_error("to_vertices: tuple is not an admissible star polygon");
    VertexChain vc;
    vc.vertices.resize(p.n);
    vc.vertices[0] = {p.ray(1), 0.0};
    double phi = 0.0;
    for (int k = 1; k <= p.n - 2; ++k) {
        phi += apex_angle(p.triple(k));
        const double r = p.ray(k + 1);
        vc.vertices[k] = {r * std::cos(phi), r * std::sin(phi)};
    }
    vc.vertices[p.n - 1] = {0.0, 0.0}; // M_n
    return vc;
}

StarPolygon from_vertices(const VertexChain& vc) {
    const std::size_t n = vc.vertices.size();
    if (n < 3)
        throw validation_error("from_vertices: need at least 3 vertices");
    const Vec2 apex = vc.vertices[n - 1];

    std::vector<Vec2> rays(n - 1);
    double scale = 0.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        rays[k] = {vc.vertices[k].x - apex.x, vc.vertices[k].y - apex.y};
        scale = std::max(scale, norm(rays[k]));
    }
    if (scale <= 0.0)
        throw domain_error("from_vertices: all vertices coincide with the apex");

    std::vector<double> lengths(2 * n - 3);
    double angle_sum = 0.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double r = norm(rays[k]);
        if (r <= tol::membership * scale)
            throw domain_error("from_vertices: vertex " + std::to_string(k + 1) +
                               " coincides with the apex");
        lengths[2 * k] = r; // t_{k+1}
        if (k + 2 < n) {
            const double ang = std::atan2(cross(rays[k], rays[k + 1]), dot(rays[k], rays[k + 1]));
            if (!(ang > 0.0) || !(ang < std::numbers::pi))
                throw domain_error("from_vertices: fan angle at vertex " + std::to_string(k + 1) +
                                   " is not in (0, pi); chain is not star-shaped about the last vertex");
            angle_sum += ang;
            const Vec2 edge = {vc.vertices[k + 1].x - vc.vertices[k].x,
                               vc.vertices[k + 1].y - vc.vertices[k].y};
            lengths[2 * k + 1] = norm(edge); // x_{k+1}
        }
    }
    if (!(angle_sum < kTwoPi - tol::membership))
        throw domain_error("from_vertices: fan angles accumulate past 2*pi");

    StarPolygon p = star_polygon(std::move(lengths));
    if (!in_Omega(p))
        throw domain_error("from_vertices: chain does not realize an admissible star polygon");
    return p;
}

bool is_convex(const VertexChain& vc) {
    const std::size_t n = vc.vertices.size();
    if (n < 3) return false;
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = vc.vertices[i];
        const Vec2& b = vc.vertices[(i + 1) % n];
        scale = std::max(scale, std::hypot(b.x - a.x, b.y - a.y));
    }
    const double margin = tol::membership * scale * scale;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = vc.vertices[i];
        const Vec2& b = vc.vertices[(i + 1) % n];
        const Vec2& c = vc.vertices[(i + 2) % n];
        const Vec2 e1 = {b.x - a.x, b.y - a.y};
        const Vec2 e2 = {c.x - b.x, c.y - b.y};
        if (cross(e1, e2) <= margin) return false;
    }
    return true;
}

bool is_convex(const StarPolygon& p) { return is_convex(to_vertices(p)); }

} // namespace polyfoil
