#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "massbound/errors.hpp"

namespace massbound {

inline double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw DimensionMismatch("dot: vector lengths differ");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

// Dense real matrix, row-major.  Sized at construction, value semantics.
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
        Matrix m(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size());
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != m.cols_)
                throw DimensionMismatch("from_rows: ragged row lengths");
            std::size_t j = 0;
            for (double x : row) m(i, j++) = x;
            ++i;
        }
        return m;
    }

    static Matrix from_columns(const std::vector<std::vector<double>>& cols) {
        if (cols.empty()) return Matrix();
        Matrix m(cols.front().size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != m.rows_)
                throw DimensionMismatch("from_columns: ragged column lengths");
            for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<double> col(std::size_t j) const {
        std::vector<double> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    void set_col(std::size_t j, std::span<const double> v) {
        if (v.size() != rows_)
            throw DimensionMismatch("set_col: length does not match row count");
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    // y = A x
    std::vector<double> apply(std::span<const double> x) const {
        if (x.size() != cols_)
            throw DimensionMismatch("apply: vector length does not match column count");
        std::vector<double> y(rows_, 0.0);
        for (std::size_t i = 0; i < rows_; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (double x : data_) s += x * x;
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0.0;
        for (double x : data_) m = std::max(m, std::abs(x));
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw DimensionMismatch("operator*: inner dimensions differ");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                const double ail = a(i, l);
                if (ail == 0.0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += ail * b(l, j);
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("operator+: shapes differ");
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("operator-: shapes differ");
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
        return c;
    }

    friend Matrix operator*(double s, const Matrix& a) {
        Matrix c = a;
        for (double& x : c.data_) x *= s;
        return c;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Dense real symmetric matrix.  Only the lower triangle is stored, so the
// symmetry invariant entries[i][j] == entries[j][i] holds exactly by
// construction.  Dimension n >= 1.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(std::size_t n) : n_(n), tri_(n * (n + 1) / 2, 0.0) {
        if (n == 0) throw InvalidArgument("SymmetricMatrix: dimension must be >= 1");
    }

    static SymmetricMatrix diagonal(std::span<const double> d) {
        SymmetricMatrix a(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) a.set(i, i, d[i]);
        return a;
    }

    static SymmetricMatrix identity(std::size_t n) {
        SymmetricMatrix a(n);
        for (std::size_t i = 0; i < n; ++i) a.set(i, i, 1.0);
        return a;
    }

    static SymmetricMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
        return from_full(Matrix::from_rows(rows));
    }

    // Rejects asymmetric input; mirror entries must match exactly.
    static SymmetricMatrix from_full(const Matrix& m) {
        if (m.rows() != m.cols())
            throw DimensionMismatch("from_full: matrix is not square");
        SymmetricMatrix a(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j <= i; ++j) {
                if (m(i, j) != m(j, i))
                    throw InvalidArgument("from_full: matrix is not symmetric");
                a.set(i, j, m(i, j));
            }
        return a;
    }

    // Averages mirror entries; for symmetrizing results of floating-point
    // products that are symmetric up to roundoff.
    static SymmetricMatrix symmetrize(const Matrix& m) {
        if (m.rows() != m.cols())
            throw DimensionMismatch("symmetrize: matrix is not square");
        SymmetricMatrix a(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j <= i; ++j) a.set(i, j, 0.5 * (m(i, j) + m(j, i)));
        return a;
    }

    std::size_t n() const noexcept { return n_; }

    double operator()(std::size_t i, std::size_t j) const {
        return i >= j ? tri_[idx(i, j)] : tri_[idx(j, i)];
    }

    void set(std::size_t i, std::size_t j, double v) {
        if (i >= j)
            tri_[idx(i, j)] = v;
        else
            tri_[idx(j, i)] = v;
    }

    Matrix to_matrix() const {
        Matrix m(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
        return m;
    }

    std::vector<double> apply(std::span<const double> x) const {
        if (x.size() != n_)
            throw DimensionMismatch("apply: vector length does not match dimension");
        std::vector<double> y(n_, 0.0);
        for (std::size_t i = 0; i < n_; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * (*this)(i, j);
        return std::sqrt(s);
    }

    double max_abs_diagonal() const {
        double m = 0.0;
        for (std::size_t i = 0; i < n_; ++i) m = std::max(m, std::abs((*this)(i, i)));
        return m;
    }

    friend SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b) {
        if (a.n_ != b.n_) throw DimensionMismatch("operator+: dimensions differ");
        SymmetricMatrix c = a;
        for (std::size_t i = 0; i < c.tri_.size(); ++i) c.tri_[i] += b.tri_[i];
        return c;
    }

    friend SymmetricMatrix operator-(const SymmetricMatrix& a, const SymmetricMatrix& b) {
        if (a.n_ != b.n_) throw DimensionMismatch("operator-: dimensions differ");
        SymmetricMatrix c = a;
        for (std::size_t i = 0; i < c.tri_.size(); ++i) c.tri_[i] -= b.tri_[i];
        return c;
    }

    friend SymmetricMatrix operator*(double s, const SymmetricMatrix& a) {
        SymmetricMatrix c = a;
        for (double& x : c.tri_) x *= s;
        return c;
    }

private:
    static std::size_t idx(std::size_t i, std::size_t j) {  // requires i >= j
        return i * (i + 1) / 2 + j;
    }

    std::size_t n_;
    std::vector<double> tri_;
};

}  // namespace massbound
