#include "qrel/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qrel {

Matrix::Matrix(int rows, int cols, std::initializer_list<Complex> entries) : Matrix(rows, cols) {
    if (static_cast<int>(entries.size()) != rows * cols) {
        throw DomainError("Matrix initializer size does not match dims");
    }
    std::copy(entries.begin(), entries.end(), m_.begin());
}

Matrix Matrix::identity(int n) {
    Matrix r(n, n);
    for (int i = 0; i < n; ++i) r(i, i) = 1.0;
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix r(rows_, cols_);
    for (size_t k = 0; k < m_.size(); ++k) r.m_[k] = m_[k] + o.m_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    Matrix r(rows_, cols_);
    for (size_t k = 0; k < m_.size(); ++k) r.m_[k] = m_[k] - o.m_[k];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Complex a = (*this)(i, k);
            if (a == Complex{}) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
        }
    }
    return r;
}

Matrix Matrix::operator*(Complex scale) const {
    Matrix r(rows_, cols_);
    for (size_t k = 0; k < m_.size(); ++k) r.m_[k] = m_[k] * scale;
    return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    for (size_t k = 0; k < m_.size(); ++k) m_[k] += o.m_[k];
    return *this;
}

Matrix Matrix::adjoint() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

Matrix Matrix::conjugate() const {
    Matrix r(rows_, cols_);
    for (size_t k = 0; k < m_.size(); ++k) r.m_[k] = std::conj(m_[k]);
    return r;
}

Complex Matrix::trace() const {
    Complex t = 0.0;
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& v : m_) s += std::norm(v);
    return std::sqrt(s);
}

double Matrix::max_abs_diff(const Matrix& o) const {
    double d = 0.0;
    for (size_t k = 0; k < m_.size(); ++k) d = std::max(d, std::abs(m_[k] - o.m_[k]));
    return d;
}

bool Matrix::is_hermitian(double tol) const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

namespace pauli {

const Matrix& id2() {
    static const Matrix m(2, 2, {1.0, 0.0, 0.0, 1.0});
    return m;
}
const Matrix& x() {
    static const Matrix m(2, 2, {0.0, 1.0, 1.0, 0.0});
    return m;
}
const Matrix& y() {
    static const Matrix m(2, 2, {0.0, Complex(0, -1), Complex(0, 1), 0.0});
    return m;
}
const Matrix& z() {
    static const Matrix m(2, 2, {1.0, 0.0, 0.0, -1.0});
    return m;
}
const Matrix& by_index(int i) {
    switch (i) {
        case 0: return x();
        case 1: return y();
        default: return z();
    }
}

}  // namespace pauli

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ia = 0; ia < a.rows(); ++ia)
        for (int ja = 0; ja < a.cols(); ++ja) {
            const Complex f = a(ia, ja);
            if (f == Complex{}) continue;
            for (int ib = 0; ib < b.rows(); ++ib)
                for (int jb = 0; jb < b.cols(); ++jb)
                    r(ia * b.rows() + ib, ja * b.cols() + jb) = f * b(ib, jb);
        }
    return r;
}

namespace {

// One cyclic Jacobi sweep over the strict upper triangle. Each rotation is a
// phase alignment followed by a real Givens rotation, applied two-sided to h
// and one-sided to the accumulated eigenvector matrix v.
void jacobi_sweep(Matrix& h, Matrix& v) {
    const int n = h.rows();
    for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const Complex hpq = h(p, q);
            const double apq = std::abs(hpq);
            if (apq == 0.0) continue;
            const Complex phase = hpq / apq;  // h(p,q) = apq * phase
            const double app = h(p, p).real();
            const double aqq = h(q, q).real();
            // Rotation angle for the phase-aligned real 2x2 block.
            const double theta = 0.5 * std::atan2(2.0 * apq, app - aqq);
            const double c = std::cos(theta);
            const Complex s = std::sin(theta) * std::conj(phase);
            // Columns: [p q] <- [p q] * [[c, -conj(s)], [s, c]]
            for (int i = 0; i < n; ++i) {
                const Complex hip = h(i, p), hiq = h(i, q);
                h(i, p) = c * hip + s * hiq;
                h(i, q) = -std::conj(s) * hip + c * hiq;
                const Complex vip = v(i, p), viq = v(i, q);
                v(i, p) = c * vip + s * viq;
                v(i, q) = -std::conj(s) * vip + c * viq;
            }
            // Rows: conjugate-transpose action.
            for (int j = 0; j < n; ++j) {
                const Complex hpj = h(p, j), hqj = h(q, j);
                h(p, j) = c * hpj + std::conj(s) * hqj;
                h(q, j) = -s * hpj + c * hqj;
            }
        }
    }
}

double offdiag_norm(const Matrix& h) {
    double s = 0.0;
    for (int i = 0; i < h.rows(); ++i)
        for (int j = 0; j < h.cols(); ++j)
            if (i != j) s += std::norm(h(i, j));
    return std::sqrt(s);
}

}  // namespace

Eigensystem hermitian_eigensystem(const Matrix& h, double tol) {
    if (h.rows() != h.cols()) throw NotHermitianError("matrix is not square");
    if (!h.is_hermitian(tol)) throw NotHermitianError("matrix exceeds Hermiticity tolerance");

    const int n = h.rows();
    Matrix a = (h + h.adjoint()) * Complex(0.5, 0.0);
    Matrix v = Matrix::identity(n);

    const double scale = std::max(a.frobenius_norm(), 1e-300);
    for (int sweep = 0; sweep < 60; ++sweep) {
        if (offdiag_norm(a) <= 1e-15 * scale) break;
        jacobi_sweep(a, v);
    }

    Eigensystem es;
    es.values.resize(n);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });
    es.vectors = Matrix(n, n);
    for (int k = 0; k < n; ++k) {
        es.values[k] = a(order[k], order[k]).real();
        for (int i = 0; i < n; ++i) es.vectors(i, k) = v(i, order[k]);
    }
    return es;
}

double trace_norm(const Matrix& a) {
    if (a.rows() != a.cols()) throw DomainError("trace_norm: matrix must be square");
    // Singular values via the Hermitian PSD matrix A^dag A.
    const Matrix ata = a.adjoint() * a;
    const Eigensystem es = hermitian_eigensystem(ata, 1e-9);
    double s = 0.0;
    for (double lam : es.values) s += std::sqrt(std::max(0.0, lam));
    return s;
}

DensityMatrix::DensityMatrix(Matrix m) : mat_(std::move(m)) {
    if (mat_.rows() != 4 || mat_.cols() != 4) throw DomainError("DensityMatrix must be 4x4");
    if (!mat_.is_hermitian(kHermTol)) throw NotHermitianError("DensityMatrix is not Hermitian");
    if (std::abs(mat_.trace() - Complex(1.0, 0.0)) > kTraceTol)
        throw DomainError("DensityMatrix trace differs from 1");
    const Eigensystem es = hermitian_eigensystem(mat_);
    if (es.values.front() < kPsdTol) throw DomainError("DensityMatrix is not positive semidefinite");
}

Matrix partial_trace(const DensityMatrix& rho, int keep) {
    if (keep != 1 && keep != 2) throw DomainError("partial_trace: keep must be 1 or 2");
    Matrix r(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                if (keep == 1)
                    r(i, j) += rho(2 * i + k, 2 * j + k);
                else
                    r(i, j) += rho(2 * k + i, 2 * k + j);
            }
    return r;
}

double wootters_concurrence(const DensityMatrix& rho) {
    const Matrix yy = kron(pauli::y(), pauli::y());
    const Matrix rho_tilde = yy * rho.mat().conjugate() * yy;

    // sqrt(rho) via eigendecomposition; rho rho~ shares its nonzero spectrum
    // with the Hermitian sqrt(rho) rho~ sqrt(rho).
    const Eigensystem es = hermitian_eigensystem(rho.mat());
    Matrix sqrt_rho(4, 4);
    for (int k = 0; k < 4; ++k) {
        const double s = std::sqrt(std::max(0.0, es.values[k]));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                sqrt_rho(i, j) += s * es.vectors(i, k) * std::conj(es.vectors(j, k));
    }
    const Matrix m = sqrt_rho * rho_tilde * sqrt_rho;
    Eigensystem mu = hermitian_eigensystem((m + m.adjoint()) * Complex(0.5, 0.0), 1e-8);

    double c = 0.0;  // sqrt(mu_max) - sum of the other sqrt(mu_k)
    for (int k = 0; k < 4; ++k) {
        const double root = std::sqrt(std::max(0.0, mu.values[k]));
        c += (k == 3) ? root : -root;
    }
    return std::clamp(c, 0.0, 1.0);
}

}  // namespace qrel
