#pragma once

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "liereps/rational.hpp"

namespace liereps {

// Minimal dense matrix over an exact field (used with Rat). Sizes here are
// tiny: rank x rank, or rank x dim(generating irrep) for projection solves.
template <class T>
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Mat transposed() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        assert(cols_ == o.rows_);
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& v = (*this)(i, k);
                if (v == T(0)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
            }
        return r;
    }

    // Row vector times matrix.
    std::vector<T> apply_left(const std::vector<T>& x) const {
        assert(x.size() == rows_);
        std::vector<T> y(cols_, T(0));
        for (std::size_t i = 0; i < rows_; ++i) {
            if (x[i] == T(0)) continue;
            for (std::size_t j = 0; j < cols_; ++j) y[j] += x[i] * (*this)(i, j);
        }
        return y;
    }

    // Matrix times column vector.
    std::vector<T> apply(const std::vector<T>& x) const {
        assert(x.size() == cols_);
        std::vector<T> y(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    Mat inverse() const {
        assert(rows_ == cols_);
        const std::size_t n = rows_;
        Mat work(*this);
        Mat inv = identity(n);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && work(piv, col) == T(0)) ++piv;
            if (piv == n) throw std::runtime_error("matrix is singular");
            if (piv != col)
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(work(piv, j), work(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            T p = work(col, col);
            for (std::size_t j = 0; j < n; ++j) {
                work(col, j) /= p;
                inv(col, j) /= p;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == col || work(i, col) == T(0)) continue;
                T f = work(i, col);
                for (std::size_t j = 0; j < n; ++j) {
                    work(i, j) -= f * work(col, j);
                    inv(i, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

    // Right-inverse A+ = At (A At)^-1 for a matrix with independent rows.
    Mat right_inverse() const {
        Mat at = transposed();
        Mat gram = (*this) * at;
        return at * gram.inverse();
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using RatMat = Mat<Rat>;

}  // namespace liereps
