#include "kdp/matrix.hpp"

#include <stdexcept>

namespace kdp {

std::vector<int> rref(CMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int r = row; r < m.rows(); ++r) {
            if (!m.at(r, col).is_zero()) { p = r; break; }
        }
        if (p < 0) continue;
        if (p != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
        GaussianRational inv = GaussianRational(1) / m.at(row, col);
        for (int c = 0; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            GaussianRational f = m.at(r, col);
            for (int c = 0; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<GaussianRational>> nullspace(const CMatrix& m) {
    CMatrix r = m;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;

    std::vector<std::vector<GaussianRational>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<GaussianRational> v(m.cols());
        v[free] = GaussianRational(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r.at(static_cast<int>(i), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<GaussianRational> solve_particular(const CMatrix& m,
                                               const std::vector<GaussianRational>& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows())
        throw std::invalid_argument("solve_particular: rhs size mismatch");
    CMatrix aug(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = rhs[r];
    }
    std::vector<int> pivots = rref(aug);
    for (int p : pivots)
        if (p == m.cols()) throw std::domain_error("solve_particular: inconsistent system");
    std::vector<GaussianRational> x(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = aug.at(static_cast<int>(i), m.cols());
    return x;
}

}  // namespace kdp
