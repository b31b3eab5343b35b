#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nnr3 {

// Dense matrix of exact scalars, row-major. All elimination routines use
// the same deterministic pivot rule: columns left to right, first row with
// a nonzero entry.
template <class K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<K> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_)
            throw std::invalid_argument("Matrix: entry count mismatch");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: size mismatch in product");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& aik = a(i, k);
                if (aik == K(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    std::vector<K> column(std::size_t j) const {
        std::vector<K> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    std::size_t rank() const {
        Matrix m = *this;
        return m.echelonize().size();
    }

    K det() const {
        if (rows_ != cols_) throw std::invalid_argument("Matrix: det of non-square matrix");
        Matrix m = *this;
        K d(1);
        for (std::size_t c = 0, r = 0; c < cols_; ++c) {
            std::size_t p = r;
            while (p < rows_ && m(p, c) == K(0)) ++p;
            if (p == rows_) return K(0);
            if (p != r) {
                m.swap_rows(p, r);
                d = -d;
            }
            d = d * m(r, c);
            for (std::size_t i = r + 1; i < rows_; ++i) {
                if (m(i, c) == K(0)) continue;
                K f = m(i, c) / m(r, c);
                for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(r, j);
            }
            ++r;
        }
        return d;
    }

    // One exact solution of A x = b with free variables set to zero, or
    // nullopt when inconsistent.
    std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
        if (b.size() != rows_) throw std::invalid_argument("Matrix: rhs size mismatch");
        Matrix aug(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_) = b[i];
        }
        auto pivots = aug.echelonize_cols(cols_);
        // Inconsistent iff some row reads 0 = nonzero.
        for (std::size_t i = pivots.size(); i < rows_; ++i)
            if (!(aug(i, cols_) == K(0))) return std::nullopt;
        std::vector<K> x(cols_, K(0));
        for (std::size_t i = pivots.size(); i-- > 0;) {
            K v = aug(i, cols_);
            for (std::size_t j = pivots[i] + 1; j < cols_; ++j)
                if (!(x[j] == K(0))) v -= aug(i, j) * x[j];
            x[pivots[i]] = v / aug(i, pivots[i]);
        }
        return x;
    }

    // Exact kernel basis; empty iff full column rank. One basis vector per
    // free column, with that free coordinate set to one.
    std::vector<std::vector<K>> nullspace() const {
        Matrix m = *this;
        auto pivots = m.echelonize();
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<std::vector<K>> basis;
        for (std::size_t f = 0; f < cols_; ++f) {
            if (is_pivot[f]) continue;
            std::vector<K> v(cols_, K(0));
            v[f] = K(1);
            for (std::size_t i = pivots.size(); i-- > 0;) {
                K s(0);
                for (std::size_t j = pivots[i] + 1; j < cols_; ++j)
                    if (!(v[j] == K(0))) s -= m(i, j) * v[j];
                v[pivots[i]] = s / m(i, pivots[i]);
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

    std::vector<K> apply(const std::vector<K>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("Matrix: vector size mismatch");
        std::vector<K> y(rows_, K(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(x[j] == K(0))) y[i] += (*this)(i, j) * x[j];
        return y;
    }

private:
    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    // Row echelon form in place; returns pivot column indices.
    std::vector<std::size_t> echelonize() { return echelonize_cols(cols_); }

    std::vector<std::size_t> echelonize_cols(std::size_t ncols) {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < ncols && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && (*this)(p, c) == K(0)) ++p;
            if (p == rows_) continue;
            if (p != r) swap_rows(p, r);
            for (std::size_t i = r + 1; i < rows_; ++i) {
                if ((*this)(i, c) == K(0)) continue;
                K f = (*this)(i, c) / (*this)(r, c);
                for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rows_, cols_;
    std::vector<K> e_;
};

}  // namespace nnr3
