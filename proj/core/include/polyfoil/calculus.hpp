#pragma once

// Perimeter and area as smooth functions of the length tuple, their exact
// gradients, and the rank classification of the stacked Jacobian.  The
// joint (perimeter, area) map has rank 2 away from regular polygons and
// drops to rank 1 exactly there; its regular level sets are the families
// of polygons sharing both invariants.

#include <functional>
#include <vector>

#include "polyfoil/matrix.hpp"
#include "polyfoil/polygon.hpp"

namespace polyfoil {

// One entry per tuple slot.
using Gradient = std::vector<double>;

struct PsiValue {
    double perimeter = 0.0;
    double area = 0.0;
};

struct RankReport {
    double sigma1 = 0.0; // largest singular value of the 2x(2n-3) Jacobian
    double sigma2 = 0.0;
    int rank = 0;        // 2 iff sigma2 > rank_ratio * sigma1
    bool is_regular_polygon = false;
};

// Sum of the boundary slots t_1, x_1..x_{n-2}, t_{n-1}; the interior
// diagonals t_2..t_{n-2} do not bound the polygon and are excluded.
double perimeter(const StarPolygon& p);

// Sum of the fan triangle areas.
double area(const StarPolygon& p);

PsiValue psi(const StarPolygon& p);

// Constant pattern (1,1,0,1,...,0,1,1): ones at the boundary slots,
// zeros at the interior diagonals.
Gradient grad_perimeter(const StarPolygon& p);

// Exact area gradient assembled from the per-triangle Heron partials.
// Throws conditioning_error naming the fan triangle whose Heron radicand
// is too close to zero for the partials to be meaningful.
Gradient grad_area(const StarPolygon& p);

// Heron-area partial derivatives of one triangle with respect to its
// three side lengths, in argument order.
struct TriplePartials {
    double d1 = 0.0;
    double d2 = 0.0;
    double d3 = 0.0;
};
TriplePartials heron_area_partials(const TriangleTriple& tr, int triangle_index = 0);

// Stacks grad_perimeter over grad_area, reports the two singular values
// and the resulting rank, plus a direct geometric regularity test (all
// sides equal and all vertices concyclic).
RankReport classify_rank(const StarPolygon& p);

// Central finite differences of an arbitrary scalar functional, one slot
// at a time.  Throws domain_error when a probe point leaves the
// admissible set ("step too large").
Gradient finite_diff_gradient(const std::function<double(const StarPolygon&)>& f,
                              const StarPolygon& p, double step);

// Generic flavour used by the slice and triangle functionals: differences
// a functional of a raw coordinate vector, guarded by a feasibility test.
std::vector<double>
finite_diff_gradient_vec(const std::function<double(const std::vector<double>&)>& f,
                         const std::vector<double>& x, double step,
                         const std::function<bool(const std::vector<double>&)>& feasible);

} // namespace polyfoil
