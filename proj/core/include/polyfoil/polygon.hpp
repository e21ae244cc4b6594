#pragma once

// Coordinate model of star-shaped n-gons.
//
// A polygon M_1..M_n that is star-shaped about its last vertex M_n is
// described, up to isometry, by the flat length tuple
//
//     (t_1, x_1, t_2, x_2, ..., t_{n-2}, x_{n-2}, t_{n-1})
//
// where t_k = |M_n M_k| are the fan rays and x_k = |M_k M_{k+1}| the outer
// sides.  Slot layout (0-based): t_k at 2k-2, x_k at 2k-1.  The tuple is
// admissible when every fan triple (t_k, x_k, t_{k+1}) is a nondegenerate
// triangle and the apex angles at M_n sum to less than 2*pi.

#include <cstddef>
#include <vector>

namespace polyfoil {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// One fan triangle (M_n, M_k, M_{k+1}): rays t and s from the apex,
// outer side x opposite the apex.
struct TriangleTriple {
    double t = 0.0;
    double x = 0.0;
    double s = 0.0;
};

struct StarPolygon {
    int n = 0;                   // vertex count, >= 3
    std::vector<double> lengths; // 2n-3 entries, interleaved as above

    double ray(int k) const { return lengths[2 * k - 2]; }   // t_k, 1-based
    double side(int k) const { return lengths[2 * k - 1]; }  // x_k, 1-based

    // Fan triple (t_k, x_k, t_{k+1}) for k = 1..n-2.
    TriangleTriple triple(int k) const {
        return {lengths[2 * k - 2], lengths[2 * k - 1], lengths[2 * k]};
    }
};

// Planar vertices M_1..M_n in canonical placement: M_n at the origin
// (stored last), M_1 on the positive x-axis.
struct VertexChain {
    std::vector<Vec2> vertices;
};

// Builds a polygon from a flat tuple; derives n from the length.
// Throws validation_error on even or short tuples.
StarPolygon star_polygon(std::vector<double> lengths);

// Strict triangle-inequality membership with the open-set margin.
// Throws validation_error on non-finite or non-positive components.
bool in_V(const TriangleTriple& tr);

// Area by Heron's formula.  Throws domain_error when tr fails in_V.
double heron_area(const TriangleTriple& tr);

// Apex angle at the fan vertex, the angle opposite side x, in (0, pi).
// Computed as arccos of the law-of-cosines ratio, which is single-valued
// and matches the acute/right/obtuse split of x^2 against t^2 + s^2.
double apex_angle(const TriangleTriple& tr);

// Membership in the admissible set: every fan triple passes in_V and the
// apex angles sum below 2*pi (with margin).  Throws validation_error on
// malformed tuples.
bool in_Omega(const StarPolygon& p);

// Canonical planar realization.  M_n = origin, M_1 = (t_1, 0), and
// M_{k+1} at polar radius t_{k+1} under the accumulated apex angles.
VertexChain to_vertices(const StarPolygon& p);

// Inverse of to_vertices: reads the length tuple off a chain that is
// star-shaped about its last vertex.  Throws domain_error naming the
// offending vertex when a fan angle leaves (0, pi) or the accumulated
// angle reaches 2*pi.
StarPolygon from_vertices(const VertexChain& vc);

// True when every interior vertex angle of the realized polygon lies in
// (0, pi), i.e. the polygon is convex.  Requires membership in Omega_n.
bool is_convex(const StarPolygon& p);
bool is_convex(const VertexChain& vc);

} // namespace polyfoil
