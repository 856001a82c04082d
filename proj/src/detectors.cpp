#include "qrel/detectors.hpp"

#include <cmath>

namespace qrel {

double omega_unruh(double t_unruh, double epsilon) {
    if (t_unruh <= 0.0) throw DomainError("t_unruh must be positive");
    if (epsilon <= 0.0) throw DomainError("epsilon must be positive");
    return std::tanh(epsilon / (2.0 * t_unruh));
}

double omega_boulware() { return 1.0; }

double omega_hh(double omega, double t_hawking, double r0, OmegaConvention conv) {
    const double theta = hawking_theta({omega, t_hawking, r0});
    if (std::isinf(theta)) return 1.0;
    return std::tanh(conv == OmegaConvention::TanhTheta ? theta : theta / 2.0);
}

XState equilibrium_state(double omega_ratio, double kappa0) {
    if (omega_ratio < 0.0 || omega_ratio > 1.0) throw DomainError("Omega must lie in [0,1]");
    if (kappa0 < -3.0 || kappa0 > 1.0) throw DomainError("kappa0 must lie in [-3,1]");

    const double w2 = omega_ratio * omega_ratio;
    const double den = 4.0 * (3.0 + w2);
    XState x;
    x.s11 = (3.0 + kappa0) * (omega_ratio - 1.0) * (omega_ratio - 1.0) / den;
    x.s44 = (3.0 + kappa0) * (omega_ratio + 1.0) * (omega_ratio + 1.0) / den;
    x.s22 = x.s33 = (3.0 - kappa0 - (kappa0 + 1.0) * w2) / den;
    x.s23 = (kappa0 - w2) / (2.0 * (3.0 + w2));
    x.s14 = 0.0;
    x.validate();
    return x;
}

ResourceReport detector_resources_closed(double omega_ratio, double kappa0) {
    const XState x = equilibrium_state(omega_ratio, kappa0);
    ResourceReport rep;
    rep.coherence = std::abs((kappa0 + 3.0) / (omega_ratio * omega_ratio + 3.0) - 1.0);
    rep.discord = rep.coherence;
    rep.concurrence = xstate_concurrence(x);
    rep.bures = bures_entanglement(rep.concurrence);
    return rep;
}

double entanglement_threshold_kappa(double omega_ratio) {
    if (omega_ratio < 0.0 || omega_ratio > 1.0) throw DomainError("Omega must lie in [0,1]");
    const double w2 = omega_ratio * omega_ratio;
    return (5.0 * w2 - 3.0) / (3.0 - w2);
}

}  // namespace qrel
