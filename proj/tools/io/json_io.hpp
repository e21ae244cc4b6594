#pragma once

// JSON and CSV surface of the command-line tool.  Polygons travel as
// {"n": int, "lengths": [2n-3 numbers]} or {"n": int, "vertices":
// [[u,v], ...]}; a vertex chain is brought to canonical placement (last
// vertex at the origin, first on the positive x-axis, counterclockwise)
// before the length tuple is read off.

#include <string>
#include <vector>

#include <json.hpp>
#include <polyfoil/calculus.hpp>
#include <polyfoil/foliation.hpp>
#include <polyfoil/inscribable.hpp>
#include <polyfoil/polygon.hpp>

namespace polyfoil::io {

using nlohmann::json;

// Accepts either schema; throws validation_error on mismatched or
// malformed payloads.
StarPolygon parse_polygon(const json& j);

// {"sides": [...]} or a bare array.
std::vector<double> parse_sides(const json& j);

json polygon_to_json(const StarPolygon& p);
json cyclic_solution_to_json(const CyclicSolution& sol);
json triangle_to_json(const TrianglePoint& tp);

// CSV with columns step_index, slot_0..slot_{2n-4}, perimeter, area,
// residual; numbers carry 17 significant digits.
std::string trace_to_csv(const LeafTrace& trace);

// printf-style %.17g, the round-trip-exact double format used in CSV.
std::string format_double(double v);

} // namespace polyfoil::io
