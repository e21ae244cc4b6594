#include "polyfoil/matrix.hpp"

#include <Eigen/Dense>

namespace polyfoil {

std::vector<double> singular_values(const Matrix& m) {
    Eigen::MatrixXd a(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    const auto& sv = svd.singularValues();
    return {sv.data(), sv.data() + sv.size()};
}

int numerical_rank(const Matrix& m, double ratio) {
    const auto sv = singular_values(m);
    if (sv.empty() || sv.front() <= 0.0) return 0;
    int rank = 0;
    for (double s : sv)
        if (s > ratio * sv.front()) ++rank;
    return rank;
}

} // namespace polyfoil
