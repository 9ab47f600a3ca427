#pragma once

#include <chambar/error.hpp>
#include <chambar/scalar.hpp>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace chambar {

/// Dense row-major matrix. The shell is generic over the entry ring (Scalar,
/// Jet); the elimination-based routines below are for Scalar entries and use
/// exact zero tests, so they are meant for exact modes.
template <typename T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (rows_ == 0 || cols_ == 0 || entries_.size() != rows_ * cols_)
            throw Error(ErrorCode::BadInput, "matrix shape does not match entry count");
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        if (rows.empty() || rows.front().empty())
            throw Error(ErrorCode::BadInput, "matrix needs at least one row and column");
        std::vector<T> flat;
        flat.reserve(rows.size() * rows.front().size());
        for (const auto& r : rows) {
            if (r.size() != rows.front().size())
                throw Error(ErrorCode::BadInput, "ragged matrix rows");
            for (const auto& x : r) flat.push_back(x);
        }
        return Matrix(rows.size(), rows.front().size(), std::move(flat));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    Matrix transpose() const {
        std::vector<T> flat;
        flat.reserve(entries_.size());
        for (std::size_t j = 0; j < cols_; ++j)
            for (std::size_t i = 0; i < rows_; ++i) flat.push_back((*this)(i, j));
        return Matrix(cols_, rows_, std::move(flat));
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> entries_;
};

template <typename T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::BadInput, "matrix sum shape mismatch");
    std::vector<T> flat;
    flat.reserve(a.rows() * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) flat.push_back(a(i, j) + b(i, j));
    return Matrix<T>(a.rows(), a.cols(), std::move(flat));
}

template <typename T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::BadInput, "matrix difference shape mismatch");
    std::vector<T> flat;
    flat.reserve(a.rows() * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) flat.push_back(a(i, j) - b(i, j));
    return Matrix<T>(a.rows(), a.cols(), std::move(flat));
}

template <typename T>
Matrix<T> operator-(const Matrix<T>& a) {
    std::vector<T> flat;
    flat.reserve(a.rows() * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) flat.push_back(-a(i, j));
    return Matrix<T>(a.rows(), a.cols(), std::move(flat));
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows())
        throw Error(ErrorCode::BadInput, "matrix product shape mismatch");
    std::vector<T> flat;
    flat.reserve(a.rows() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            T acc = a(i, 0) * b(0, j);
            for (std::size_t k = 1; k < a.cols(); ++k) acc = acc + a(i, k) * b(k, j);
            flat.push_back(std::move(acc));
        }
    return Matrix<T>(a.rows(), b.cols(), std::move(flat));
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const T& s) {
    std::vector<T> flat;
    flat.reserve(a.rows() * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) flat.push_back(a(i, j) * s);
    return Matrix<T>(a.rows(), a.cols(), std::move(flat));
}

template <typename T>
Matrix<T> operator*(const T& s, const Matrix<T>& a) {
    std::vector<T> flat;
    flat.reserve(a.rows() * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) flat.push_back(s * a(i, j));
    return Matrix<T>(a.rows(), a.cols(), std::move(flat));
}

template <typename T>
T trace(const Matrix<T>& a) {
    if (!a.square()) throw Error(ErrorCode::BadInput, "trace of a non-square matrix");
    T acc = a(0, 0);
    for (std::size_t i = 1; i < a.rows(); ++i) acc = acc + a(i, i);
    return acc;
}

namespace detail {
template <typename T>
Matrix<T> strike(const Matrix<T>& a, std::size_t row, std::size_t col) {
    std::vector<T> flat;
    flat.reserve((a.rows() - 1) * (a.cols() - 1));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i == row) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j == col) continue;
            flat.push_back(a(i, j));
        }
    }
    return Matrix<T>(a.rows() - 1, a.cols() - 1, std::move(flat));
}
} // namespace detail

/// Cofactor expansion along the first row; division-free, so usable with
/// polynomial (jet) entries. Intended for small orders.
template <typename T>
T determinant(const Matrix<T>& a) {
    if (!a.square()) throw Error(ErrorCode::BadInput, "determinant of a non-square matrix");
    if (a.rows() == 1) return a(0, 0);
    T acc = a(0, 0) * determinant(detail::strike(a, 0, 0));
    for (std::size_t j = 1; j < a.cols(); ++j) {
        T term = a(0, j) * determinant(detail::strike(a, 0, j));
        acc = (j % 2 == 1) ? acc - term : acc + term;
    }
    return acc;
}

/// Transposed cofactor matrix, adj(A) * A = det(A) * id. Division-free.
/// Needs order >= 2 (a 1x1 adjugate would require a unit of the entry ring).
template <typename T>
Matrix<T> adjugate(const Matrix<T>& a) {
    if (!a.square() || a.rows() < 2)
        throw Error(ErrorCode::BadInput, "adjugate needs a square matrix of order >= 2");
    std::vector<T> flat;
    flat.reserve(a.rows() * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            T c = determinant(detail::strike(a, j, i));
            flat.push_back((i + j) % 2 == 1 ? -c : c);
        }
    return Matrix<T>(a.rows(), a.cols(), std::move(flat));
}

using ScalarMatrix = Matrix<Scalar>;

ScalarMatrix identity_matrix(std::size_t n, const Scalar& prototype);
ScalarMatrix matrix_power(const ScalarMatrix& a, unsigned k);
bool matrix_is_zero(const ScalarMatrix& a);

/// Reduced row echelon form by exact Gauss-Jordan elimination. Pivot columns
/// (ascending) are written to *pivots when given.
ScalarMatrix rref(ScalarMatrix a, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const ScalarMatrix& a);

/// Basis of the right kernel, one vector per free column in ascending column
/// order with a unit in the free slot — deterministic for identical input.
std::vector<std::vector<Scalar>> null_space(const ScalarMatrix& a);

/// Throws RankDeficient when singular.
ScalarMatrix inverse(const ScalarMatrix& a);

/// One exact solution of a x = b with every free coordinate set to zero, or
/// nullopt when the system is inconsistent.
std::optional<std::vector<Scalar>> solve_linear(const ScalarMatrix& a, const std::vector<Scalar>& b);
/// Column-wise variant (one elimination pass for all right-hand sides);
/// nullopt when any column is inconsistent.
std::optional<ScalarMatrix> solve_linear(const ScalarMatrix& a, const ScalarMatrix& rhs);

} // namespace chambar
