#pragma once

#include "qrel/hawking_gisin.hpp"
#include "qrel/resources.hpp"

namespace qrel {

/// The printed closed forms for the Hartle-Hawking bath identify the rate
/// ratio (e^theta - 1)/(e^theta + 1) with tanh(theta); algebraically the left
/// side is tanh(theta/2). Both readings are available; TanhTheta reproduces
/// the published critical temperatures.
enum class OmegaConvention { TanhTheta, HalfTheta };

/// Kossakowski rate ratio for two uniformly accelerated detectors,
/// tanh(epsilon / (2 t_unruh)).
double omega_unruh(double t_unruh, double epsilon);

/// Static detectors in the Boulware vacuum: absorption and emission rates
/// coincide, so the ratio is exactly 1.
double omega_boulware();

/// Static detectors in the Hartle-Hawking vacuum under geometric optics:
/// tanh(theta) or tanh(theta/2) of hawking_theta(omega, t_hawking, r0).
double omega_hh(double omega, double t_hawking, double r0, OmegaConvention conv);

/// Large-time equilibrium of the two-detector master equation, selected by
/// the rate ratio Omega in [0,1] and the conserved initial-state invariant
/// kappa0 in [-3,1]:
///   s11 = (3+k)(Omega-1)^2 / (4(3+Omega^2)),  s44 = (3+k)(Omega+1)^2 / (...),
///   s22 = s33 = (3-k-(k+1)Omega^2) / (...),    s23 = (k-Omega^2) / (2(3+Omega^2)).
XState equilibrium_state(double omega_ratio, double kappa0);

/// Closed-form report: C_H = D_T = |(kappa0+3)/(Omega^2+3) - 1|, entanglement
/// quantities from the equilibrium X state.
ResourceReport detector_resources_closed(double omega_ratio, double kappa0);

/// Entanglement boundary (5 Omega^2 - 3)/(3 - Omega^2): the equilibrium is
/// entangled exactly for kappa0 below it.
double entanglement_threshold_kappa(double omega_ratio);

}  // namespace qrel
