#pragma once

#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

#include "qrel/errors.hpp"

namespace qrel {

using Complex = std::complex<double>;

/// Small dense complex matrix, row-major. The public API of this library only
/// ever hands out 2x2 and 4x4 instances; intermediate Kronecker factors may be
/// any size.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), m_(static_cast<size_t>(rows) * cols) {}

    /// Row-major brace construction for fixed sizes, e.g. Matrix(2, 2, {a, b, c, d}).
    Matrix(int rows, int cols, std::initializer_list<Complex> entries);

    static Matrix identity(int n);
    static Matrix zero(int n) { return Matrix(n, n); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Complex& operator()(int i, int j) { return m_[static_cast<size_t>(i) * cols_ + j]; }
    const Complex& operator()(int i, int j) const { return m_[static_cast<size_t>(i) * cols_ + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(Complex scale) const;
    Matrix& operator+=(const Matrix& o);

    Matrix adjoint() const;
    Matrix conjugate() const;
    Complex trace() const;

    double frobenius_norm() const;
    double max_abs_diff(const Matrix& o) const;
    bool is_hermitian(double tol) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Complex> m_;
};

inline Matrix operator*(Complex scale, const Matrix& m) { return m * scale; }

/// Pauli matrices and friends in the computational basis.
namespace pauli {
const Matrix& id2();
const Matrix& x();
const Matrix& y();
const Matrix& z();
/// x(), y(), z() by index 0..2.
const Matrix& by_index(int i);
}  // namespace pauli

/// Kronecker product; dims multiply.
Matrix kron(const Matrix& a, const Matrix& b);

struct Eigensystem {
    std::vector<double> values;  // ascending
    Matrix vectors;              // orthonormal columns, vectors.col(k) <-> values[k]
};

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Inputs within `tol` of Hermitian are symmetrized first; anything further is
/// rejected with NotHermitianError.
Eigensystem hermitian_eigensystem(const Matrix& h, double tol = 1e-10);

/// Sum of singular values, Tr sqrt(A^dag A).
double trace_norm(const Matrix& a);

/// Validated 4x4 two-qubit density operator.
class DensityMatrix {
public:
    static constexpr double kHermTol = 1e-12;
    static constexpr double kTraceTol = 1e-12;
    static constexpr double kPsdTol = -1e-10;

    /// Validates Hermiticity, unit trace, and positive semidefiniteness.
    explicit DensityMatrix(Matrix m);

    const Matrix& mat() const { return mat_; }
    const Complex& operator()(int i, int j) const { return mat_(i, j); }

private:
    Matrix mat_;
};

/// Reduced single-qubit state; keep = 1 keeps the first tensor factor.
Matrix partial_trace(const DensityMatrix& rho, int keep);

/// Standard two-qubit concurrence: max(0, sqrt(mu1)-sqrt(mu2)-sqrt(mu3)-sqrt(mu4))
/// with mu_k the descending eigenvalues of rho (sy x sy) rho* (sy x sy).
/// Evaluated through the Hermitian form sqrt(rho) rho~ sqrt(rho).
double wootters_concurrence(const DensityMatrix& rho);

}  // namespace qrel
