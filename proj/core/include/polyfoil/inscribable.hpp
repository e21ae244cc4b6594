#pragma once

// Cyclic (inscribable) polygons.  A convex quadrilateral with consecutive
// sides u1, u2, u4, u5 and diagonal u3 between the first and third vertex
// is cyclic exactly when the degree-4 polynomial Theta below vanishes
// (opposite angles are supplementary).  Sliding Theta along the length
// tuple characterizes the inscribable polygons as the common zero set of
// n-3 such polynomials; that map has full rank everywhere, so the zero
// set is a smooth codimension n-3 subset.  A unique cyclic polygon exists
// for any prescribed side lengths satisfying the strict polygon
// inequality; solve_cyclic constructs it by root-finding on the
// circumradius.

#include <vector>

#include "polyfoil/matrix.hpp"
#include "polyfoil/polygon.hpp"

namespace polyfoil {

struct GammaValue {
    std::vector<double> components; // n-3 entries, units length^4
};

struct CyclicSolution {
    double circumradius = 0.0;
    bool center_inside = false;    // circumcenter inside the polygon
    std::vector<double> diagonals; // t_2..t_{n-2}
    StarPolygon polygon;
};

// Theta(u) = u1*u2*(u4^2 + u5^2 - u3^2) + u4*u5*(u1^2 + u2^2 - u3^2).
// Total polynomial, homogeneous of degree 4.
double theta(double u1, double u2, double u3, double u4, double u5);

// Component k applies theta to the k-th window of five consecutive slots
// (t_k, x_k, t_{k+1}, x_{k+1}, t_{k+2}), k = 1..n-3.  Empty for n = 3:
// every triangle is cyclic.
GammaValue gamma(const StarPolygon& p);

// True when the whole gamma vector vanishes below tol * (max length)^4.
// Requires a convex polygon; throws domain_error otherwise.
bool is_inscribable(const StarPolygon& p, double tolerance = 1e-8);

// Analytic Jacobian of gamma, (n-3) x (2n-3), banded: row k touches the
// five consecutive slots of its window.
Matrix gamma_jacobian(const StarPolygon& p);

// Unique cyclic polygon with the given consecutive side lengths
// (t_1, x_1, ..., x_{n-2}, t_{n-1}).  The circumradius R solves a
// monotone central-angle equation by bisection: with theta(u, R) =
// 2*arcsin(u / 2R), either the central angles sum to 2*pi (center inside)
// or, when they already fall short at R = u_max / 2, the remaining chords
// must subtend exactly the angle of the longest one (center beyond it).
// Throws domain_error when a side reaches the sum of the others, and
// numerical_error when bisection fails to bracket or converge.
CyclicSolution solve_cyclic(const std::vector<double>& sides);

// Regular n-gon of perimeter L as a length tuple: all sides L/n and
// diagonals 2R sin(k*pi/n) with R the circumradius of the side.
StarPolygon regular_polygon(int n, double L);

} // namespace polyfoil
