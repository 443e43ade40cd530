#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "qdrd/errors.hpp"
#include "qdrd/op_counter.hpp"
#include "qdrd/scalar_ops.hpp"

namespace qdrd {

// Dense complex column vector.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t n) : e_(n, Complex{0.0, 0.0}) {}
    Vector(std::initializer_list<Complex> init) : e_(init) {}

    std::size_t size() const { return e_.size(); }
    Complex& operator[](std::size_t i) { return e_[i]; }
    const Complex& operator[](std::size_t i) const { return e_[i]; }

    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }

    friend bool operator==(const Vector&, const Vector&) = default;

private:
    std::vector<Complex> e_;
};

// Dense complex matrix, row-major. Sizes here are tiny (m, n <= ~8), so the
// layout is chosen for clarity of the operation counts, not speed.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Complex{0.0, 0.0}) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Complex{1.0, 0.0};
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Vector col(std::size_t j) const {
        Vector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> e_;
};

inline std::string dim_str(std::size_t r, std::size_t c) {
    return std::to_string(r) + "x" + std::to_string(c);
}

// C = A * B.
inline Matrix matmul(const Matrix& a, const Matrix& b, OpCounter& ctr = OpCounter::disabled()) {
    if (a.cols() != b.rows())
        throw DimensionError("matmul: " + dim_str(a.rows(), a.cols()) + " times " +
                             dim_str(b.rows(), b.cols()));
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < a.cols(); ++k)
                acc = cadd(acc, cmul(a(i, k), b(k, j), ctr), ctr);
            c(i, j) = acc;
        }
    return c;
}

// Conjugate transpose. Conjugation is a sign flip and is not booked.
inline Matrix hermitian(const Matrix& a) {
    Matrix h(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) h(j, i) = std::conj(a(i, j));
    return h;
}

inline Vector matvec(const Matrix& a, const Vector& x, OpCounter& ctr = OpCounter::disabled()) {
    if (a.cols() != x.size())
        throw DimensionError("matvec: " + dim_str(a.rows(), a.cols()) + " times vector of length " +
                             std::to_string(x.size()));
    Vector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex acc{0.0, 0.0};
        for (std::size_t j = 0; j < a.cols(); ++j)
            acc = cadd(acc, cmul(a(i, j), x[j], ctr), ctr);
        y[i] = acc;
    }
    return y;
}

// z = A^H * y without materializing the transpose.
inline Vector conj_transpose_matvec(const Matrix& a, const Vector& y,
                                    OpCounter& ctr = OpCounter::disabled()) {
    if (a.rows() != y.size())
        throw DimensionError("conj_transpose_matvec: " + dim_str(a.rows(), a.cols()) +
                             "^H times vector of length " + std::to_string(y.size()));
    Vector z(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        Complex acc{0.0, 0.0};
        for (std::size_t i = 0; i < a.rows(); ++i)
            acc = cadd(acc, cmul(std::conj(a(i, j)), y[i], ctr), ctr);
        z[j] = acc;
    }
    return z;
}

// u^H v.
inline Complex dot_conj(const Vector& u, const Vector& v, OpCounter& ctr = OpCounter::disabled()) {
    if (u.size() != v.size()) throw DimensionError("dot_conj: length mismatch");
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < u.size(); ++i)
        acc = cadd(acc, cmul(std::conj(u[i]), v[i], ctr), ctr);
    return acc;
}

inline Vector vec_sub(const Vector& a, const Vector& b, OpCounter& ctr = OpCounter::disabled()) {
    if (a.size() != b.size()) throw DimensionError("vec_sub: length mismatch");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = csub(a[i], b[i], ctr);
    return r;
}

// Squared Euclidean 2-norm, sum of |v_i|^2.
inline double sq_norm2(const Vector& v, OpCounter& ctr = OpCounter::disabled()) {
    double acc = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) acc = radd(acc, cabs2(v[i], ctr), ctr);
    return acc;
}

// Squared Frobenius norm.
inline double sq_norm_fro(const Matrix& a, OpCounter& ctr = OpCounter::disabled()) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) acc = radd(acc, cabs2(a(i, j), ctr), ctr);
    return acc;
}

// Diagnostics below are for tests and reports, uncounted on purpose.

inline double fro_distance(const Matrix& a, const Matrix& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) acc += std::norm(a(i, j) - b(i, j));
    return std::sqrt(acc);
}

inline double max_abs_diff(const Vector& a, const Vector& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace qdrd
