#pragma once

// Families of polygons sharing both perimeter and area.  Away from the
// regular polygons the joint (perimeter, area) map has full rank, so its
// level sets are smooth: curves for triangles, higher-dimensional sheets
// for n > 3.  trace_leaf walks one such level set by tangent prediction
// and Gauss-Newton correction; the triangle specialization works with the
// squared-area polynomial Phi, whose differential has the closed
// polynomial components (A, B, C) below.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "polyfoil/calculus.hpp"
#include "polyfoil/polygon.hpp"
#include "polyfoil/tolerances.hpp"

namespace polyfoil {

// Triangle by its three side lengths.
struct TrianglePoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// Side order is a pure relabeling: the tuple's fan apex is the vertex
// opposite side y.
StarPolygon triangle_to_tuple(const TrianglePoint& tp);
TrianglePoint tuple_to_triangle(const StarPolygon& p);

enum class TraceStop : std::uint8_t {
    max_samples,   // sample budget exhausted
    closed_loop,   // returned within step/2 of the start
    left_domain,   // next step would leave the admissible set
};

struct LeafTrace {
    PsiValue target;                 // the leaf's shared (perimeter, area)
    std::vector<StarPolygon> samples;
    std::vector<double> arc_steps;   // predictor step per sample, 0 for the seed
    std::vector<bool> converged;     // corrector residual below the leaf bound
    bool closed_loop = false;
    TraceStop stop = TraceStop::max_samples;
};

// Squared triangle area: (1/16)(x+y+z)(-x+y+z)(x-y+z)(x+y-z).
// Throws domain_error outside the open triangle-inequality set.
double phi(const TrianglePoint& tp);

// Polynomial components (A, B, C) of 16 * dPhi; total functions, no
// domain restriction.  They vanish simultaneously only at the origin.
std::array<double, 3> phi_gradient(const TrianglePoint& tp);

// Walks the level set of (perimeter, area) through `start`.  Triangles
// follow the tangent line of the curve with consistent orientation and
// detect loop closure; for n > 3 each step takes a seeded random unit
// direction in the tangent space, sampling the sheet instead of
// parametrizing it.  `leaf_tol` bounds the relative conservation error
// an accepted sample may carry.  Throws domain_error when `start` is a
// regular polygon (a point leaf) and numerical_error when the corrector
// diverges.
LeafTrace trace_leaf(const StarPolygon& start, double step, int max_samples,
                     std::uint64_t seed = 0, double leaf_tol = tol::leaf);

// The two isosceles triangles <x,x,z> with semiperimeter `lambda` and
// area `a0` (default: the one-parameter family value 3*lambda^2 /
// (7*sqrt(7)), which gives (11,11,6) and (8,8,12) at lambda = 14).  The
// first has the longer equal sides.  Throws domain_error when a0 is not
// strictly between 0 and the equilateral maximum.
std::pair<TrianglePoint, TrianglePoint> isosceles_equal_pair(double lambda);
std::pair<TrianglePoint, TrianglePoint> isosceles_equal_pair(double lambda, double a0);

// Interior lattice of the constant-perimeter plaque {x+y+z = 2*lambda}:
// barycentric subdivisions of the open triangle with corners
// (0,lambda,lambda), (lambda,0,lambda), (lambda,lambda,0).  Boundary
// points are excluded; grid < 3 therefore yields no samples.
std::vector<TrianglePoint> plaque_sample(double lambda, int grid);

} // namespace polyfoil
