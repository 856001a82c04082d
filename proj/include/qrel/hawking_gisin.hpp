#pragma once

#include "qrel/resources.hpp"

namespace qrel {

/// Gisin family parameters: mixing weight alpha in [0,1] and Bell-like angle
/// phi in [0, pi/2].
struct GisinParams {
    double alpha = 1.0;
    double phi = 0.0;

    void validate() const;
};

/// Static-observer environment outside the horizon. Units k_B = hbar = c = 1;
/// the temperature corresponds to mass through t_hawking = 1/(8 pi M).
struct HawkingEnv {
    double omega = 10.0;      // field mode frequency
    double t_hawking = 1.0;   // Hawking temperature, > 0 (0 handled via theta = inf)
    double r0 = 1.1;          // distance in Schwarzschild radii, > 1

    /// True when the near-horizon approximation holds, (r0 - 1) <= 1.
    bool rindler_valid() const { return r0 - 1.0 <= 1.0; }
};

/// Gisin state as an X state:
/// s11 = s44 = (1-alpha)/2, s22 = alpha sin^2 phi, s33 = alpha cos^2 phi,
/// s23 = (alpha/2) sin 2phi.
XState gisin_density(const GisinParams& p);

/// Redshifted frequency-to-temperature ratio theta = (omega/T_H) sqrt(1 - 1/r0).
/// Temperatures below 1e-9 map to +infinity (the identity-channel limit).
double hawking_theta(const HawkingEnv& env);

/// Traces the horizon's hidden region out of the static observer's mode:
/// a two-branch map on qubit 2 with amplitudes c = (1+e^-theta)^{-1/2} on
/// |0> -> |0>, s = (1+e^theta)^{-1/2} on |0> -> |1>, identity on |1>.
/// theta = +inf gives the identity channel.
DensityMatrix hawking_channel_accessible(const DensityMatrix& rho, double theta);

/// Quantifiers of the accessible state rho_AI. Coherence and discord use the
/// closed form |alpha sin(2 phi)| / sqrt(1 + e^-theta); concurrence and Bures
/// come from the channel-constructed state itself.
ResourceReport gisin_hawking_resources(const GisinParams& p, const HawkingEnv& env);

/// Smallest alpha for which the accessible state is entangled, by bisection
/// on the signed concurrence branch |s23| - sqrt(s11 s44) of rho_AI.
/// Throws NoRootError when the branch keeps one sign on (0, 1].
double entanglement_threshold_alpha(double phi, double theta, double tol);

}  // namespace qrel
