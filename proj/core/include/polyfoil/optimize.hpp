#pragma once

// Constrained area maximization.  Fixing the perimeter eliminates t_1
// affinely and leaves a convex open slice of dimension 2n-4 on which the
// area has its unique critical point at the regular polygon; fixing all
// n sides leaves the interior diagonals free, and the unique critical
// point is the cyclic polygon.  Both maximizers are gradient ascents
// with backtracking line search and feasibility shrinking.

#include <cstdint>
#include <optional>
#include <vector>

#include "polyfoil/calculus.hpp"
#include "polyfoil/polygon.hpp"

namespace polyfoil {

// Fixed-perimeter coordinates: every tuple slot except t_1, in tuple
// order (x_1, t_2, x_2, ..., t_{n-2}, x_{n-2}, t_{n-1}).
struct PerimeterSlice {
    int n = 0;
    double L = 0.0;
    std::vector<double> free; // 2n-4 entries
};

// Fixed boundary lengths with the interior diagonals free.
struct SideFixedConfig {
    std::vector<double> sides;     // n entries (t_1, x_1, ..., x_{n-2}, t_{n-1})
    std::vector<double> diagonals; // n-3 entries (t_2, ..., t_{n-2})
};

// Completes the slice point to the full tuple, with
// t_1 = L - x_1 - ... - x_{n-2} - t_{n-1}.
// Throws domain_error when t_1 would be non-positive or the lifted tuple
// is inadmissible.
StarPolygon lift(const PerimeterSlice& slice);

StarPolygon lift(const SideFixedConfig& config);

// Gradient of the restricted area over the slice coordinates: the
// t_1-column of the area gradient is folded into every slot that the
// perimeter constraint couples to t_1 (all sides, not the diagonals).
Gradient grad_area_L(const PerimeterSlice& slice);

// Gradient of the area over the free diagonals at fixed sides.
Gradient grad_area_fixed_sides(const SideFixedConfig& config);

struct AscentReport {
    int iterations = 0;
    double grad_norm = 0.0; // at the returned point
};

struct AscentOptions {
    double grad_tolerance = 1e-8; // relative to the problem scale:
                                  // the fixed perimeter, or the longest side
    int max_iterations = 10000;
    std::uint64_t seed = 0;       // start perturbation seed
    AscentReport* report = nullptr;
};

// Maximizes the area at fixed perimeter from `start` (default: the
// regular slice point perturbed by about one percent per slot).  The
// limit is the regular polygon.  Throws numerical_error when the
// iteration cap is reached before the gradient norm drops below
// tolerance * scale.
StarPolygon maximize_area_fixed_perimeter(int n, double L,
                                          const std::optional<PerimeterSlice>& start = {},
                                          const AscentOptions& options = {});

// Maximizes the area over the diagonals at fixed sides, keeping every
// iterate convex.  The limit matches solve_cyclic on the same sides.
StarPolygon maximize_area_fixed_sides(const std::vector<double>& sides,
                                      const std::optional<std::vector<double>>& start = {},
                                      const AscentOptions& options = {});

} // namespace polyfoil
