// SPDX-License-Identifier: Apache-2.0
#include "graphcalc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "graphcalc/error.hpp"

namespace graphcalc {

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

std::vector<double> DenseMatrix::multiply(std::span<const double> x) const {
    std::vector<double> y(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& other) const {
    DenseMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const double a = (*this)(i, k);
            if (a == 0.0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
        }
    }
    return out;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
}

double DenseMatrix::frobenius_norm() const {
    double acc = 0.0;
    for (double v : data_) acc += v * v;
    return std::sqrt(acc);
}

double DenseMatrix::asymmetry() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i + 1; j < cols_; ++j) worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
    }
    return worst;
}

double dot(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) acc += a(i, j) * a(i, j);
        }
    }
    return std::sqrt(acc);
}

// Rotation annihilating a(p, q), following the stable formulation in
// Golub & Van Loan (symmetric Schur decomposition).
void rotate(DenseMatrix& a, DenseMatrix& v, std::size_t p, std::size_t q) {
    const double apq = a(p, q);
    if (apq == 0.0) return;
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const std::size_t n = a.rows();

    for (std::size_t k = 0; k < n; ++k) {
        const double akp = a(k, p);
        const double akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(k, q) = s * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double apk = a(p, k);
        const double aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double vkp = v(k, p);
        const double vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
    }
}

}  // namespace

SymmetricEigen jacobi_eigen(const DenseMatrix& symmetric, double tolerance, int max_sweeps) {
    const std::size_t n = symmetric.rows();
    if (symmetric.cols() != n) throw NumericalError("not_square", "eigensolve needs a square matrix");

    // Work on the exactly symmetrized copy.
    DenseMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (symmetric(i, j) + symmetric(j, i));
    }
    DenseMatrix v = DenseMatrix::identity(n);
    const double threshold = tolerance * std::max(1.0, a.frobenius_norm());

    SymmetricEigen out;
    while (off_diagonal_norm(a) > threshold) {
        if (out.sweeps == max_sweeps) {
            throw NumericalError("eigensolver_no_convergence",
                                 "Jacobi iteration did not converge in " + std::to_string(max_sweeps) + " sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
        }
        ++out.sweeps;
    }

    // Sign convention, then order.
    for (std::size_t k = 0; k < n; ++k) {
        double biggest = 0.0;
        for (std::size_t i = 0; i < n; ++i) biggest = std::max(biggest, std::abs(v(i, k)));
        for (std::size_t i = 0; i < n; ++i) {
            if (std::abs(v(i, k)) > 1e-10 * biggest) {
                if (v(i, k) < 0.0) {
                    for (std::size_t r = 0; r < n; ++r) v(r, k) = -v(r, k);
                }
                break;
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
    const double tie = 1e-12 * std::max(1.0, a.frobenius_norm());
    for (std::size_t start = 0; start < n;) {
        std::size_t end = start + 1;
        while (end < n && a(order[end], order[end]) - a(order[start], order[start]) <= tie) ++end;
        std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(start), order.begin() + static_cast<std::ptrdiff_t>(end),
                         [&](std::size_t i, std::size_t j) {
                             for (std::size_t r = 0; r < n; ++r) {
                                 if (v(r, i) != v(r, j)) return v(r, i) > v(r, j);
                             }
                             return false;
                         });
        start = end;
    }

    out.values.resize(n);
    out.vectors = DenseMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]);
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

Cholesky::Cholesky(const DenseMatrix& spd) : upper_(spd.rows(), spd.cols()) {
    const std::size_t n = spd.rows();
    for (std::size_t i = 0; i < n; ++i) {
        double diag = spd(i, i);
        for (std::size_t k = 0; k < i; ++k) diag -= upper_(k, i) * upper_(k, i);
        if (!(diag > 0.0)) {
            throw NumericalError("not_positive_definite",
                                 "matrix is not positive definite (pivot " + std::to_string(i) + ")");
        }
        const double r = std::sqrt(diag);
        upper_(i, i) = r;
        for (std::size_t j = i + 1; j < n; ++j) {
            double acc = spd(i, j);
            for (std::size_t k = 0; k < i; ++k) acc -= upper_(k, i) * upper_(k, j);
            upper_(i, j) = acc / r;
        }
    }
}

std::vector<double> Cholesky::solve(std::span<const double> rhs) const {
    const std::size_t n = upper_.rows();
    std::vector<double> y(rhs.begin(), rhs.end());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < i; ++k) y[i] -= upper_(k, i) * y[k];
        y[i] /= upper_(i, i);
    }
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t k = i + 1; k < n; ++k) y[i] -= upper_(i, k) * y[k];
        y[i] /= upper_(i, i);
    }
    return y;
}

std::vector<double> Cholesky::solve_refined(const DenseMatrix& original, std::span<const double> rhs,
                                            int rounds) const {
    auto x = solve(rhs);
    for (int r = 0; r < rounds; ++r) {
        const auto ax = original.multiply(x);
        std::vector<double> residual(rhs.size());
        for (std::size_t i = 0; i < rhs.size(); ++i) residual[i] = rhs[i] - ax[i];
        const auto correction = solve(residual);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += correction[i];
    }
    return x;
}

}  // namespace graphcalc
