#include "io/json_io.hpp"

#include <cmath>
#include <cstdio>

#include <polyfoil/errors.hpp>

namespace polyfoil::io {

namespace {

std::vector<double> number_array(const json& j, const char* what) {
    if (!j.is_array() || j.empty())
        throw validation_error(std::string("expected a non-empty array for ") + what);
    std::vector<double> v;
    v.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_number())
            throw validation_error(std::string(what) + " must contain numbers only");
        v.push_back(e.get<double>());
    }
    return v;
}

// Translate the last vertex to the origin, rotate the first onto the
// positive x-axis, and mirror clockwise chains; all isometries, so the
// length tuple is unchanged.
VertexChain canonicalize(std::vector<Vec2> pts) {
    const Vec2 apex = pts.back();
    for (Vec2& p : pts) {
        p.x -= apex.x;
        p.y -= apex.y;
    }
    double twice_area = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Vec2& a = pts[i];
        const Vec2& b = pts[(i + 1) % pts.size()];
        twice_area += a.x * b.y - b.x * a.y;
    }
    if (twice_area < 0.0)
        for (Vec2& p : pts) p.y = -p.y;
    const double r = std::hypot(pts.front().x, pts.front().y);
    if (r > 0.0) {
        const double c = pts.front().x / r;
        const double s = pts.front().y / r;
        for (Vec2& p : pts) {
            const double x = c * p.x + s * p.y;
            const double y = -s * p.x + c * p.y;
            p.x = x;
            p.y = y;
        }
    }
    VertexChain vc;
    vc.vertices = std::move(pts);
    return vc;
}

} // namespace

StarPolygon parse_polygon(const json& j) {
    if (!j.is_object())
        throw validation_error("polygon payload must be a JSON object");

    if (j.contains("lengths")) {
        StarPolygon p = star_polygon(number_array(j["lengths"], "lengths"));
        if (j.contains("n") && j["n"].get<int>() != p.n)
            throw validation_error("field n does not match the tuple length");
        return p;
    }
    if (j.contains("vertices")) {
        const json& arr = j["vertices"];
        if (!arr.is_array() || arr.size() < 3)
            throw validation_error("vertices must be an array of at least 3 points");
        std::vector<Vec2> pts;
        for (const auto& e : arr) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw validation_error("each vertex must be a [u, v] pair of numbers");
            pts.push_back({e[0].get<double>(), e[1].get<double>()});
        }
        if (j.contains("n") && j["n"].get<std::size_t>() != pts.size())
            throw validation_error("field n does not match the vertex count");
        return from_vertices(canonicalize(std::move(pts)));
    }
    throw validation_error("polygon payload needs a lengths or vertices field");
}

std::vector<double> parse_sides(const json& j) {
    if (j.is_array()) return number_array(j, "sides");
    if (j.is_object() && j.contains("sides")) return number_array(j["sides"], "sides");
    throw validation_error("sides payload must be an array or an object with a sides field");
}

json polygon_to_json(const StarPolygon& p) {
    return json{{"n", p.n}, {"lengths", p.lengths}};
}

json cyclic_solution_to_json(const CyclicSolution& sol) {
    return json{{"circumradius", sol.circumradius},
                {"center_inside", sol.center_inside},
                {"diagonals", sol.diagonals},
                {"polygon", polygon_to_json(sol.polygon)}};
}

json triangle_to_json(const TrianglePoint& tp) {
    return json{{"sides", {tp.x, tp.y, tp.z}}};
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string trace_to_csv(const LeafTrace& trace) {
    std::string out = "step_index";
    const std::size_t slots = trace.samples.empty() ? 0 : trace.samples[0].lengths.size();
    for (std::size_t i = 0; i < slots; ++i) out += ",slot_" + std::to_string(i);
    out += ",perimeter,area,residual\n";
    for (std::size_t k = 0; k < trace.samples.size(); ++k) {
        const StarPolygon& s = trace.samples[k];
        const PsiValue v = psi(s);
        const double residual =
            std::max(std::abs(v.perimeter - trace.target.perimeter) / trace.target.perimeter,
                     std::abs(v.area - trace.target.area) / trace.target.area);
        out += std::to_string(k);
        for (double x : s.lengths) out += "," + format_double(x);
        out += "," + format_double(v.perimeter);
        out += "," + format_double(v.area);
        out += "," + format_double(residual);
        out += "\n";
    }
    return out;
}

} // namespace polyfoil::io
