#include "qrel/resources.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qrel/nelder_mead.hpp"

namespace qrel {

void XState::validate() const {
    const double tol = 1e-12;
    if (std::abs(s11 + s22 + s33 + s44 - 1.0) > tol)
        throw DomainError("XState populations do not sum to 1");
    for (double p : {s11, s22, s33, s44})
        if (p < -tol) throw DomainError("XState has a negative population");
    if (s14 * s14 > s11 * s44 + tol) throw DomainError("XState violates s14^2 <= s11*s44");
    if (s23 * s23 > s22 * s33 + tol) throw DomainError("XState violates s23^2 <= s22*s33");
}

Matrix XState::to_matrix() const {
    Matrix m(4, 4);
    m(0, 0) = s11;
    m(1, 1) = s22;
    m(2, 2) = s33;
    m(3, 3) = s44;
    m(0, 3) = m(3, 0) = s14;
    m(1, 2) = m(2, 1) = s23;
    return m;
}

DensityMatrix XState::to_density() const {
    validate();
    return DensityMatrix(to_matrix());
}

XState XState::from_density(const DensityMatrix& rho, double tol) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const bool x_slot = (i == j) || (i + j == 3);
            if (!x_slot && std::abs(rho(i, j)) > tol)
                throw DomainError("density matrix is not an X state");
        }
    if (std::abs(rho(0, 3).imag()) > tol || std::abs(rho(1, 2).imag()) > tol)
        throw DomainError("X state coherences must be real");
    XState x;
    x.s11 = rho(0, 0).real();
    x.s22 = rho(1, 1).real();
    x.s33 = rho(2, 2).real();
    x.s44 = rho(3, 3).real();
    x.s14 = rho(0, 3).real();
    x.s23 = rho(1, 2).real();
    return x;
}

double l1_coherence(const DensityMatrix& rho) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) s += std::abs(rho(i, j));
    return s;
}

double hellinger_coherence(const DensityMatrix& rho) {
    Matrix d(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            const Complex v = rho(i, j);
            const double a = std::abs(v);
            // entrywise sqrt minus the (equal) diagonal parts leaves only this
            d(i, j) = (a == 0.0) ? Complex{} : std::sqrt(a) * (v / a);
        }
    return (d * d).trace().real();
}

double xstate_concurrence(const XState& x) {
    const double l1 = std::abs(x.s14) - std::sqrt(std::max(0.0, x.s22 * x.s33));
    const double l2 = std::abs(x.s23) - std::sqrt(std::max(0.0, x.s11 * x.s44));
    return 2.0 * std::max({0.0, l1, l2});
}

double bures_entanglement(double concurrence) {
    if (concurrence < -1e-12 || concurrence > 1.0 + 1e-12)
        throw DomainError("bures_entanglement: concurrence outside [0,1]");
    const double c = std::clamp(concurrence, 0.0, 1.0);
    const double inner = std::sqrt(2.0 + 2.0 * std::sqrt(1.0 - c * c));
    return std::sqrt(std::max(0.0, 2.0 - inner)) / std::sqrt(2.0 - std::sqrt(2.0));
}

double trace_distance_discord_closed(const XState& x) {
    const double u1 = 2.0 * (std::abs(x.s23) + std::abs(x.s14));
    const double u2 = 2.0 * (std::abs(x.s23) - std::abs(x.s14));
    const double u3 = 1.0 - 2.0 * (x.s22 + x.s33);
    const double u30 = 2.0 * (std::abs(x.s11) + std::abs(x.s22)) - 1.0;
    const double umin2 = std::min(u1 * u1, u3 * u3);
    const double umax2 = std::max(u3 * u3, u2 * u2 + u30 * u30);
    const double den = umax2 - umin2 + u1 * u1 - u2 * u2;
    if (std::abs(den) < 1e-12) return std::abs(u1);
    return std::sqrt(std::max(0.0, (u1 * u1 * umax2 - u2 * u2 * umin2) / den));
}

namespace {

// Schatten-1 norm of a Hermitian difference: sum of |eigenvalues|. The
// oracle's inner loop only ever sees Hermitian arguments.
double hermitian_trace_norm(const Matrix& a) {
    const Eigensystem es = hermitian_eigensystem(a, 1e-9);
    double s = 0.0;
    for (double lam : es.values) s += std::abs(lam);
    return s;
}

// Candidate classical-quantum state from 9 parameters:
// [theta, phi, p, b1(3), b2(3)]. p is clamped to [0,1], Bloch vectors are
// radially projected onto the unit ball.
Matrix cq_candidate(const std::vector<double>& v) {
    const double theta = v[0], phi = v[1];
    const double n0 = std::sin(theta) * std::cos(phi);
    const double n1 = std::sin(theta) * std::sin(phi);
    const double n2 = std::cos(theta);
    Matrix proj1 = (pauli::id2() + n0 * pauli::x() + n1 * pauli::y() + n2 * pauli::z()) *
                   Complex(0.5, 0.0);
    Matrix proj2 = pauli::id2() - proj1;
    const double p = std::clamp(v[2], 0.0, 1.0);

    Matrix out(4, 4);
    const double weights[2] = {p, 1.0 - p};
    const Matrix* projs[2] = {&proj1, &proj2};
    for (int k = 0; k < 2; ++k) {
        double bx = v[3 + 3 * k], by = v[4 + 3 * k], bz = v[5 + 3 * k];
        const double bn = std::sqrt(bx * bx + by * by + bz * bz);
        if (bn > 1.0) {
            bx /= bn;
            by /= bn;
            bz /= bn;
        }
        Matrix qubit2 = (pauli::id2() + bx * pauli::x() + by * pauli::y() + bz * pauli::z()) *
                        Complex(0.5, 0.0);
        out += kron(*projs[k], qubit2) * Complex(weights[k], 0.0);
    }
    return out;
}

// Post-measurement state along axis n as a starting point: the measured state
// is itself classical-quantum, usually close to the optimum.
std::vector<double> measured_start(const DensityMatrix& rho, double n0, double n1, double n2) {
    Matrix proj1 = (pauli::id2() + n0 * pauli::x() + n1 * pauli::y() + n2 * pauli::z()) *
                   Complex(0.5, 0.0);
    Matrix proj2 = pauli::id2() - proj1;

    std::vector<double> v(9, 0.0);
    v[0] = std::acos(std::clamp(n2, -1.0, 1.0));
    v[1] = std::atan2(n1, n0);

    const Matrix* projs[2] = {&proj1, &proj2};
    double weight1 = 0.0;
    for (int k = 0; k < 2; ++k) {
        const Matrix big = kron(*projs[k], pauli::id2());
        const Matrix sub = big * rho.mat() * big;
        // conditional qubit-2 state: trace out qubit 1
        Matrix cond(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int a = 0; a < 2; ++a) cond(i, j) += sub(2 * a + i, 2 * a + j);
        const double w = cond.trace().real();
        if (k == 0) weight1 = w;
        if (w > 1e-12) {
            v[3 + 3 * k] = (cond * pauli::x()).trace().real() / w;
            v[4 + 3 * k] = (cond * pauli::y()).trace().real() / w;
            v[5 + 3 * k] = (cond * pauli::z()).trace().real() / w;
        }
    }
    v[2] = weight1;
    return v;
}

}  // namespace

double trace_distance_discord_oracle(const DensityMatrix& rho, int restarts, double tol,
                                     std::mt19937_64& rng) {
    if (restarts < 1) throw DomainError("discord oracle needs at least one restart");

    auto objective = [&rho](const std::vector<double>& v) {
        return hermitian_trace_norm(rho.mat() - cq_candidate(v));
    };

    std::vector<std::vector<double>> starts;
    starts.push_back(measured_start(rho, 0.0, 0.0, 1.0));
    starts.push_back(measured_start(rho, 1.0, 0.0, 0.0));
    starts.push_back(measured_start(rho, 0.0, 1.0, 0.0));

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int r = 0; r < restarts; ++r) {
        std::vector<double> v(9);
        v[0] = std::acos(2.0 * unit(rng) - 1.0);
        v[1] = 2.0 * std::numbers::pi * unit(rng);
        v[2] = unit(rng);
        for (int k = 0; k < 2; ++k) {
            double b[3] = {gauss(rng), gauss(rng), gauss(rng)};
            const double n = std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
            const double radius = std::cbrt(unit(rng));
            for (int i = 0; i < 3; ++i) v[3 + 3 * k + i] = (n > 0) ? b[i] / n * radius : 0.0;
        }
        starts.push_back(std::move(v));
    }

    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : starts) {
        const NelderMeadResult r = nelder_mead(objective, s, 0.15, tol * 1e-3, 2500);
        best = std::min(best, r.value);
    }
    return best;
}

ResourceReport resource_report(const XState& x) {
    x.validate();
    ResourceReport rep;
    rep.coherence = 2.0 * (std::abs(x.s14) + std::abs(x.s23));
    rep.discord = trace_distance_discord_closed(x);
    rep.concurrence = xstate_concurrence(x);
    rep.bures = bures_entanglement(rep.concurrence);
    return rep;
}

XState random_xstate(std::mt19937_64& rng) {
    std::exponential_distribution<double> expo(1.0);
    std::uniform_real_distribution<double> sym(-1.0, 1.0);
    double p[4];
    double total = 0.0;
    for (double& v : p) {
        v = expo(rng);
        total += v;
    }
    XState x;
    x.s11 = p[0] / total;
    x.s22 = p[1] / total;
    x.s33 = p[2] / total;
    x.s44 = p[3] / total;
    x.s14 = sym(rng) * std::sqrt(x.s11 * x.s44);
    x.s23 = sym(rng) * std::sqrt(x.s22 * x.s33);
    return x;
}

}  // namespace qrel
