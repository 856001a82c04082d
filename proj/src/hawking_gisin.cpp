#include "qrel/hawking_gisin.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace qrel {

void GisinParams::validate() const {
    if (alpha < 0.0 || alpha > 1.0) throw DomainError("alpha must lie in [0,1]");
    if (phi < 0.0 || phi > std::numbers::pi / 2.0 + 1e-12)
        throw DomainError("phi must lie in [0, pi/2]");
}

XState gisin_density(const GisinParams& p) {
    p.validate();
    const double s = std::sin(p.phi), c = std::cos(p.phi);
    XState x;
    x.s11 = x.s44 = (1.0 - p.alpha) / 2.0;
    x.s22 = p.alpha * s * s;
    x.s33 = p.alpha * c * c;
    x.s23 = (p.alpha / 2.0) * std::sin(2.0 * p.phi);
    x.s14 = 0.0;
    x.validate();
    return x;
}

double hawking_theta(const HawkingEnv& env) {
    if (env.r0 <= 1.0) throw DomainError("r0 must exceed 1");
    if (env.t_hawking < 0.0) throw DomainError("t_hawking must be non-negative");
    if (env.t_hawking < 1e-9) return std::numeric_limits<double>::infinity();
    return (env.omega / env.t_hawking) * std::sqrt(1.0 - 1.0 / env.r0);
}

DensityMatrix hawking_channel_accessible(const DensityMatrix& rho, double theta) {
    if (theta < 0.0) throw DomainError("theta must be non-negative");
    if (std::isinf(theta)) return rho;

    const double c = 1.0 / std::sqrt(1.0 + std::exp(-theta));
    const double s = 1.0 / std::sqrt(1.0 + std::exp(theta));

    Matrix k0(2, 2, {c, 0.0, 0.0, 1.0});     // |0> -> c |0>, |1> -> |1>
    Matrix k1(2, 2, {0.0, 0.0, s, 0.0});     // |0> -> s |1>
    const Matrix big0 = kron(pauli::id2(), k0);
    const Matrix big1 = kron(pauli::id2(), k1);
    Matrix out = big0 * rho.mat() * big0.adjoint() + big1 * rho.mat() * big1.adjoint();
    return DensityMatrix((out + out.adjoint()) * Complex(0.5, 0.0));
}

ResourceReport gisin_hawking_resources(const GisinParams& p, const HawkingEnv& env) {
    const double theta = hawking_theta(env);
    const DensityMatrix accessible =
        hawking_channel_accessible(gisin_density(p).to_density(), theta);
    const XState x = XState::from_density(accessible);

    ResourceReport rep;
    const double damp = std::isinf(theta) ? 1.0 : 1.0 / std::sqrt(1.0 + std::exp(-theta));
    rep.coherence = std::abs(p.alpha * std::sin(2.0 * p.phi)) * damp;
    rep.discord = rep.coherence;
    rep.concurrence = xstate_concurrence(x);
    rep.bures = bures_entanglement(rep.concurrence);
    return rep;
}

namespace {

// Signed branch whose zero marks the entanglement boundary of rho_AI;
// the other branch -sqrt(s22 s33) is never positive here (s14 stays 0).
double concurrence_branch(double alpha, double phi, double theta) {
    const XState g = gisin_density({alpha, phi});
    const DensityMatrix out = hawking_channel_accessible(g.to_density(), theta);
    const XState x = XState::from_density(out);
    return std::abs(x.s23) - std::sqrt(std::max(0.0, x.s11 * x.s44));
}

}  // namespace

double entanglement_threshold_alpha(double phi, double theta, double tol) {
    if (phi <= 0.0 || phi >= std::numbers::pi / 2.0)
        throw DomainError("threshold search needs phi in (0, pi/2)");
    if (tol <= 0.0) throw DomainError("tol must be positive");

    double lo = 0.0, hi = 1.0;
    double flo = concurrence_branch(1e-12, phi, theta);
    const double fhi = concurrence_branch(1.0, phi, theta);
    if (flo > 0.0 || fhi < 0.0 || flo * fhi > 0.0)
        throw NoRootError("concurrence keeps one sign on alpha in [0,1]");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (concurrence_branch(mid, phi, theta) <= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace qrel
