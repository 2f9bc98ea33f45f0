// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace graphcalc {

/// Row-major dense matrix.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    std::vector<double> multiply(std::span<const double> x) const;
    DenseMatrix multiply(const DenseMatrix& other) const;
    DenseMatrix transpose() const;

    double frobenius_norm() const;
    /// Largest |a_ij - a_ji|.
    double asymmetry() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

struct SymmetricEigen {
    std::vector<double> values;  ///< ascending
    DenseMatrix vectors;         ///< column k pairs with values[k]; orthonormal
    int sweeps = 0;
};

/// Cyclic Jacobi diagonalization of a symmetric matrix.
///
/// Sweeps until the off-diagonal Frobenius norm drops below
/// `tolerance * max(1, ||A||_F)`. Eigenpairs are sorted ascending; each
/// vector's first component with |v_i| > 1e-10 * max|v| is made positive, and
/// numerically tied eigenvalues are ordered by that normalized vector
/// (lexicographically). Throws NumericalError if `max_sweeps` is exhausted.
SymmetricEigen jacobi_eigen(const DenseMatrix& symmetric, double tolerance = 1e-14, int max_sweeps = 100);

/// Cholesky factorization A = R^T R of a symmetric positive definite matrix.
class Cholesky {
public:
    /// Throws NumericalError("not_positive_definite") when a pivot is <= 0.
    explicit Cholesky(const DenseMatrix& spd);

    std::vector<double> solve(std::span<const double> rhs) const;

    /// Solve followed by rounds of iterative refinement against `original`.
    std::vector<double> solve_refined(const DenseMatrix& original, std::span<const double> rhs, int rounds = 2) const;

private:
    DenseMatrix upper_;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);

}  // namespace graphcalc
