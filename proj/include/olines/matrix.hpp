#pragma once

#include "olines/field.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace olines {

/// Dense row-major matrix over any scalar type.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

/// Conjugate transpose A*.
template <class T>
Matrix<T> adjoint(const Matrix<T>& a) {
    Matrix<T> t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = conj(a(i, j));
    }
    return t;
}

/// Exact rank by fraction-free (Bareiss) elimination with row pivoting.
/// Columns without a pivot are skipped, so rectangular input is fine.
template <ExactField F>
std::size_t rank(Matrix<F> a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    F prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && is_zero(a(p, c))) ++p;
        if (p == m) continue;
        a.swap_rows(p, r);
        const F pivot = a(r, c);
        for (std::size_t i = r + 1; i < m; ++i) {
            const F lead = a(i, c);
            for (std::size_t j = c + 1; j < n; ++j) {
                a(i, j) = (pivot * a(i, j) - lead * a(r, j)) / prev;
            }
            a(i, c) = F(0);
        }
        prev = pivot;
        ++r;
    }
    return r;
}

/// Determinant of a square matrix via the same elimination.
template <ExactField F>
F determinant(Matrix<F> a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("determinant: matrix not square");
    if (n == 0) return F(1);
    F prev(1);
    bool negate = false;
    for (std::size_t c = 0; c + 1 < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(a(p, c))) ++p;
        if (p == n) return F(0);
        if (p != c) {
            a.swap_rows(p, c);
            negate = !negate;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                a(i, j) = (a(c, c) * a(i, j) - a(i, c) * a(c, j)) / prev;
            }
            a(i, c) = F(0);
        }
        prev = a(c, c);
    }
    return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

}  // namespace olines
