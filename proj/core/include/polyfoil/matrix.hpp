#pragma once

#include <cstddef>
#include <vector>

namespace polyfoil {

// Minimal dense row-major matrix, sized for the small Jacobians that show
// up here (at most a few dozen rows/columns).
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// Singular values in decreasing order.
std::vector<double> singular_values(const Matrix& m);

// Count of singular values above ratio * sigma_max.
int numerical_rank(const Matrix& m, double ratio);

} // namespace polyfoil
