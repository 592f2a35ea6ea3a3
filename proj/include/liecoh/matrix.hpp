#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "liecoh/errors.hpp"
#include "liecoh/rational.hpp"

namespace liecoh {

using Vector = std::vector<Rational>;

/// Dense rational matrix, row-major. Ambient dimensions in this project stay
/// tiny (at most C(6,3) = 20 on either side), so no sparse storage.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> init) {
        rows_ = static_cast<int>(init.size());
        cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
        a_.reserve(static_cast<std::size_t>(rows_) * cols_);
        for (const auto& row : init) {
            if (static_cast<int>(row.size()) != cols_) throw Error("ragged initializer for Matrix");
            for (const auto& x : row) a_.push_back(x);
        }
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const std::vector<Vector>& rows) {
        Matrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
        for (int i = 0; i < m.rows(); ++i) {
            if (static_cast<int>(rows[i].size()) != m.cols()) throw Error("ragged row list for Matrix");
            for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    Vector row(int i) const {
        Vector r(cols_);
        for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }
    Vector col(int j) const {
        Vector c(rows_);
        for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Rational& x = a(i, k);
                if (x == 0) continue;
                for (int j = 0; j < b.cols_; ++j)
                    if (b(k, j) != 0) c(i, j) += x * b(k, j);
            }
        return c;
    }

    Vector apply(const Vector& v) const {
        if (static_cast<int>(v.size()) != cols_) throw Error("matrix-vector shape mismatch");
        Vector r(rows_);
        for (int i = 0; i < rows_; ++i) {
            Rational s = 0;
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && v[j] != 0) s += (*this)(i, j) * v[j];
            r[i] = s;
        }
        return r;
    }

    bool is_zero() const {
        for (const auto& x : a_) if (x != 0) return false;
        return true;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < rows_; ++i) {
            s += i ? "; " : "[";
            for (int j = 0; j < cols_; ++j) s += (j ? ", " : "") + to_string((*this)(i, j));
        }
        return s + "]";
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

struct RrefResult {
    Matrix reduced;
    int rank = 0;
    std::vector<int> pivots;  // pivot column per nonzero row
};

/// Reduced row echelon form by exact Gauss-Jordan elimination. Pivot choice is
/// deterministic: leftmost nonzero column, first available row.
inline RrefResult rref(Matrix m) {
    RrefResult out;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
        Rational inv = Rational(1) / m(r, c);
        for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(m);
    return out;
}

inline int rank(const Matrix& m) { return rref(m).rank; }

/// Determinant by fraction-producing Gaussian elimination (exact).
inline Rational det(Matrix m) {
    if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
    Rational d = 1;
    int n = m.rows();
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int i = c; i < n; ++i)
            if (m(i, c) != 0) { pivot = i; break; }
        if (pivot < 0) return 0;
        if (pivot != c) {
            for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        Rational inv = Rational(1) / m(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Rational f = m(i, c) * inv;
            for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

/// Exact inverse via Gauss-Jordan on [m | I]. Throws if singular.
inline Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
    int n = m.rows();
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    RrefResult rr = rref(aug);
    for (int i = 0; i < n; ++i)
        if (rr.reduced(i, i) != 1) throw Error("matrix is singular");
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = rr.reduced(i, n + j);
    return inv;
}

}  // namespace liecoh
