#pragma once

// Dense matrices over an exact coefficient ring, plus Gauss-Jordan solve and
// nullspace over the Gaussian rationals.  Sizes here are tiny (<= 10 for the
// representations, a few hundred for entry-constraint solves), so simplicity
// beats cleverness.

#include <cassert>
#include <vector>

#include "kdp/coord_polynomial.hpp"
#include "kdp/gaussian_rational.hpp"

namespace kdp {

template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    [[nodiscard]] int rows() const noexcept { return rows_; }
    [[nodiscard]] int cols() const noexcept { return cols_; }

    T& at(int r, int c) {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }
    const T& at(int r, int c) const {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& v : data_)
            if (!v.is_zero()) return false;
        return true;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix out(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
        return out;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix out(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
        return out;
    }
    Matrix operator-() const {
        Matrix out(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
        return out;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.rows_);
        Matrix out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const T& bkj = b.at(k, j);
                    if (bkj.is_zero()) continue;
                    out.at(i, j) += aik * bkj;
                }
            }
        return out;
    }
    Matrix& operator+=(const Matrix& o) { *this = *this + o; return *this; }
    Matrix& operator-=(const Matrix& o) { *this = *this - o; return *this; }

    [[nodiscard]] Matrix scaled(const T& s) const {
        Matrix out(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
        return out;
    }

    [[nodiscard]] Matrix conj_transpose() const {
        Matrix out(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) out.at(c, r) = conj(at(r, c));
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    int rows_, cols_;
    std::vector<T> data_;
};

using CMatrix = Matrix<GaussianRational>;
using PolyMatrix = Matrix<CoordPolynomial>;

inline PolyMatrix to_poly_matrix(const CMatrix& m) {
    PolyMatrix out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero()) out.at(r, c) = CoordPolynomial(m.at(r, c));
    return out;
}

inline PolyMatrix scale_matrix(const CMatrix& m, const CoordPolynomial& p) {
    PolyMatrix out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero()) out.at(r, c) = p.scaled(EnergyScalar(m.at(r, c)));
    return out;
}

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(CMatrix& m);

// Basis of the right nullspace of m (each vector has length m.cols()).
std::vector<std::vector<GaussianRational>> nullspace(const CMatrix& m);

// One particular solution of m x = rhs; throws std::domain_error when the
// system is inconsistent.
std::vector<GaussianRational> solve_particular(const CMatrix& m,
                                               const std::vector<GaussianRational>& rhs);

}  // namespace kdp
