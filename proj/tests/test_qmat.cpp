#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qrel/qmat.hpp"

using namespace qrel;

namespace {

Matrix random_matrix(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
    return m;
}

Matrix random_hermitian(std::mt19937_64& rng, int n) {
    const Matrix a = random_matrix(rng, n);
    return (a + a.adjoint()) * Complex(0.5, 0.0);
}

DensityMatrix random_density(std::mt19937_64& rng) {
    Matrix a = random_matrix(rng, 4);
    Matrix r = a * a.adjoint();
    return DensityMatrix(r * (1.0 / r.trace().real()));
}

DensityMatrix bell_phi_plus() {
    Matrix m(4, 4);
    m(0, 0) = m(3, 3) = m(0, 3) = m(3, 0) = 0.5;
    return DensityMatrix(m);
}

}  // namespace

TEST_CASE("kron basics") {
    const Matrix i4 = kron(pauli::id2(), pauli::id2());
    CHECK(i4.max_abs_diff(Matrix::identity(4)) == 0.0);

    const Matrix zz = kron(pauli::z(), pauli::z());
    const Matrix zz_expected(4, 4, {1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1});
    CHECK(zz.max_abs_diff(zz_expected) == 0.0);

    const Matrix xx = kron(pauli::x(), pauli::x());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(xx(i, j) == Complex(i + j == 3 ? 1.0 : 0.0, 0.0));
}

TEST_CASE("kron is associative and bilinear") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix a = random_matrix(rng, 2), b = random_matrix(rng, 2),
                     c = random_matrix(rng, 2);
        CHECK(kron(kron(a, b), c).max_abs_diff(kron(a, kron(b, c))) < 1e-12);
        const Complex mu(0.7, -0.3);
        CHECK(kron(a * mu + b, c).max_abs_diff(kron(a, c) * mu + kron(b, c)) < 1e-12);
        CHECK(kron(a, b * mu + c).max_abs_diff(kron(a, b) * mu + kron(a, c)) < 1e-12);
    }
}

TEST_CASE("eigensystem on known inputs") {
    const Eigensystem ez = hermitian_eigensystem(pauli::z());
    CHECK(ez.values[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(ez.values[1] == doctest::Approx(1.0).epsilon(1e-12));

    Matrix d(4, 4);
    d(0, 0) = 0.3;
    d(1, 1) = 0.1;
    d(2, 2) = 0.4;
    d(3, 3) = 0.2;
    const Eigensystem ed = hermitian_eigensystem(d);
    CHECK(ed.values[0] == doctest::Approx(0.1).epsilon(1e-13));
    CHECK(ed.values[1] == doctest::Approx(0.2).epsilon(1e-13));
    CHECK(ed.values[2] == doctest::Approx(0.3).epsilon(1e-13));
    CHECK(ed.values[3] == doctest::Approx(0.4).epsilon(1e-13));

    const Eigensystem eb = hermitian_eigensystem(bell_phi_plus().mat());
    CHECK(std::abs(eb.values[0]) < 1e-12);
    CHECK(std::abs(eb.values[1]) < 1e-12);
    CHECK(std::abs(eb.values[2]) < 1e-12);
    CHECK(eb.values[3] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eigensystem reconstructs the input") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix h = random_hermitian(rng, 4);
        const Eigensystem es = hermitian_eigensystem(h);

        Matrix rebuilt(4, 4);
        for (int k = 0; k < 4; ++k)
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    rebuilt(i, j) += es.values[k] * es.vectors(i, k) * std::conj(es.vectors(j, k));
        CHECK((rebuilt - h).frobenius_norm() < 1e-10);

        const Matrix vtv = es.vectors.adjoint() * es.vectors;
        CHECK(vtv.max_abs_diff(Matrix::identity(4)) < 1e-10);

        for (int k = 1; k < 4; ++k) CHECK(es.values[k] >= es.values[k - 1]);
    }
}

TEST_CASE("eigensystem rejects non-Hermitian input") {
    Matrix m(2, 2, {0.0, 1.0, 0.0, 0.0});
    CHECK_THROWS_AS(hermitian_eigensystem(m), NotHermitianError);
}

TEST_CASE("trace norm") {
    CHECK(trace_norm(pauli::x()) == doctest::Approx(2.0).epsilon(1e-13));
    const Matrix d(2, 2, {1.0, 0.0, 0.0, -2.0});
    CHECK(trace_norm(d) == doctest::Approx(3.0).epsilon(1e-13));

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix h = random_hermitian(rng, 4);
        const Eigensystem es = hermitian_eigensystem(h);
        double expect = 0.0;
        for (double v : es.values) expect += std::abs(v);
        CHECK(trace_norm(h) == doctest::Approx(expect).epsilon(1e-10));
    }
}

TEST_CASE("partial trace") {
    std::mt19937_64 rng(23);

    // product state: tracing one factor returns the other
    Matrix a = random_matrix(rng, 2);
    Matrix qa = a * a.adjoint();
    qa = qa * (1.0 / qa.trace().real());
    Matrix b = random_matrix(rng, 2);
    Matrix qb = b * b.adjoint();
    qb = qb * (1.0 / qb.trace().real());
    const DensityMatrix prod{kron(qa, qb)};
    CHECK(partial_trace(prod, 1).max_abs_diff(qa) < 1e-12);
    CHECK(partial_trace(prod, 2).max_abs_diff(qb) < 1e-12);

    const Matrix half = pauli::id2() * Complex(0.5, 0.0);
    CHECK(partial_trace(bell_phi_plus(), 2).max_abs_diff(half) < 1e-12);

    // the maximally entangled Bell-like state has maximally mixed marginals
    Matrix g(4, 4);
    g(1, 1) = g(2, 2) = 0.5;
    g(1, 2) = g(2, 1) = 0.5;
    CHECK(partial_trace(DensityMatrix(g), 1).max_abs_diff(half) < 1e-12);

    for (int trial = 0; trial < 20; ++trial) {
        const DensityMatrix rho = random_density(rng);
        CHECK(std::abs(partial_trace(rho, 1).trace() - Complex(1.0, 0.0)) < 1e-12);
        CHECK(std::abs(partial_trace(rho, 2).trace() - Complex(1.0, 0.0)) < 1e-12);
    }
}

TEST_CASE("wootters concurrence on known states") {
    CHECK(wootters_concurrence(bell_phi_plus()) == doctest::Approx(1.0).epsilon(1e-10));

    const DensityMatrix mixed{Matrix::identity(4) * Complex(0.25, 0.0)};
    CHECK(wootters_concurrence(mixed) == doctest::Approx(0.0).epsilon(1e-10));

    // pure sin(phi)|01> + cos(phi)|10> has concurrence sin(2 phi); the
    // rank-1 boundary amplifies eigenvalue round-off through the square
    // roots, so the tolerance is wider than for generic states
    const double phi = std::acos(-1.0) / 8.0;
    Matrix psi(4, 4);
    const double s = std::sin(phi), c = std::cos(phi);
    psi(1, 1) = s * s;
    psi(2, 2) = c * c;
    psi(1, 2) = psi(2, 1) = s * c;
    CHECK(wootters_concurrence(DensityMatrix(psi)) ==
          doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-7));
}

TEST_CASE("density matrix validation") {
    Matrix bad(4, 4);
    bad(0, 0) = 1.5;
    bad(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityMatrix{bad}, DomainError);

    Matrix not_unit = Matrix::identity(4);
    CHECK_THROWS_AS(DensityMatrix{not_unit}, DomainError);

    Matrix skew(4, 4);
    skew(0, 0) = skew(1, 1) = skew(2, 2) = skew(3, 3) = 0.25;
    skew(0, 1) = 0.1;
    skew(1, 0) = -0.1;
    CHECK_THROWS_AS(DensityMatrix{skew}, NotHermitianError);
}
