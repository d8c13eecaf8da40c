#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "cubic7/errors.hpp"
#include "cubic7/exactnum/rational.hpp"

namespace cubic7 {

// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        for (const auto& row : init) {
            if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
            for (const auto& v : row) a_.push_back(v);
        }
    }
    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(a_.begin() + static_cast<long>(i * cols_),
                              a_.begin() + static_cast<long>((i + 1) * cols_));
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> c;
        for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
        return c;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    template <class F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        Matrix<decltype(f(std::declval<const T&>()))> m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }

    bool is_zero() const {
        using cubic7::is_zero;
        for (const auto& v : a_)
            if (!is_zero(v)) return false;
        return true;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        check_same(x, y);
        Matrix r(x.rows_, x.cols_);
        for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] + y.a_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        check_same(x, y);
        Matrix r(x.rows_, x.cols_);
        for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] - y.a_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& x) {
        Matrix r(x.rows_, x.cols_);
        for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = -x.a_[k];
        return r;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw DimensionMismatch("matrix product");
        using cubic7::is_zero;
        Matrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const T& xik = x(i, k);
                if (is_zero(xik)) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) {
                    const T& ykj = y(k, j);
                    if (is_zero(ykj)) continue;
                    r(i, j) = r(i, j) + xik * ykj;
                }
            }
        return r;
    }
    friend Matrix operator*(const T& s, const Matrix& x) {
        Matrix r(x.rows_, x.cols_);
        for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = s * x.a_[k];
        return r;
    }
    friend std::vector<T> operator*(const Matrix& x, const std::vector<T>& v) {
        if (x.cols_ != v.size()) throw DimensionMismatch("matrix-vector product");
        std::vector<T> r(x.rows_, T{});
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t j = 0; j < x.cols_; ++j) r[i] = r[i] + x(i, j) * v[j];
        return r;
    }

private:
    static void check_same(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DimensionMismatch("matrix shapes differ");
    }
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

template <class T>
struct Echelon {
    Matrix<T> reduced;
    std::vector<std::size_t> pivots;
};

// Reduced row echelon form; pivots are chosen left to right.
template <class T>
Echelon<T> row_echelon(Matrix<T> m) {
    using cubic7::is_zero;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        T inv = T{1} / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            T f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j))) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
    return row_echelon(m).pivots.size();
}

template <class T>
T determinant(Matrix<T> m) {
    using cubic7::is_zero;
    if (!m.square()) throw DimensionMismatch("determinant of non-square matrix");
    std::size_t n = m.rows();
    T det{1};
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(m(p, c))) ++p;
        if (p == n) return T{};
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det = det * m(c, c);
        T inv = T{1} / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c))) continue;
            T f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
        }
    }
    return det;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
    if (!m.square()) throw DimensionMismatch("inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix<T> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = T{1};
    }
    auto e = row_echelon(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix<T> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

// Basis of {v : m v = 0}, one vector per free column.
template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m) {
    auto e = row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(m.cols(), T{});
        v[f] = T{1};
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Some solution of m x = b, if one exists.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, const std::vector<T>& b) {
    if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length");
    Matrix<T> aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto e = row_echelon(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    std::vector<T> x(m.cols(), T{});
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
    return x;
}

using QMatrix = Matrix<Rational>;
using ZMatrix = Matrix<Integer>;

}  // namespace cubic7
