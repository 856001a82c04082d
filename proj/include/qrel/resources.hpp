#pragma once

#include <cstdint>
#include <random>

#include "qrel/qmat.hpp"

namespace qrel {

/// Two-qubit X state: populations on the diagonal, real coherences on the
/// anti-diagonal (s14) and inner block (s23). Every state this library
/// produces lives in this family.
struct XState {
    double s11 = 0.0, s22 = 0.0, s33 = 0.0, s44 = 0.0;
    double s14 = 0.0, s23 = 0.0;

    /// Throws DomainError on broken normalization, negative populations, or
    /// coherences beyond the positivity bounds s14^2 <= s11*s44, s23^2 <= s22*s33.
    void validate() const;

    Matrix to_matrix() const;
    DensityMatrix to_density() const;

    /// Reads the X entries back from a density matrix; throws DomainError if
    /// entries outside the X pattern exceed `tol` or coherences carry an
    /// imaginary part beyond it.
    static XState from_density(const DensityMatrix& rho, double tol = 1e-9);
};

/// The four quantifiers for one state.
struct ResourceReport {
    double coherence = 0.0;   // C_H
    double discord = 0.0;     // D_T
    double concurrence = 0.0; // C
    double bures = 0.0;       // B_d
};

/// Sum of |off-diagonal| entries in the computational basis.
double l1_coherence(const DensityMatrix& rho);

/// Hellinger-style coherence via the entrywise square root
/// (sqrt(rho))_kj = sqrt(|rho_kj|) e^{i arg rho_kj}: Tr[(sqrt(rho)-sqrt(rho_diag))^2].
/// Agrees with l1_coherence on Hermitian input; kept as an independent route.
double hellinger_coherence(const DensityMatrix& rho);

/// X-state concurrence 2 max{0, |s14|-sqrt(s22 s33), |s23|-sqrt(s11 s44)}.
double xstate_concurrence(const XState& x);

/// Normalized Bures entanglement of a concurrence value,
/// sqrt(2 - sqrt(2 + 2 sqrt(1-c^2))) / sqrt(2 - sqrt(2)).
double bures_entanglement(double concurrence);

/// Closed-form trace-distance discord for X states. Degenerate denominators
/// (every s14 = 0 state in this library) return the |Upsilon_1| limit.
double trace_distance_discord_closed(const XState& x);

/// Variational upper bound on the trace-distance discord: minimizes
/// ||rho - Sigma||_1 over classical-quantum candidates
/// Sigma = p P1 x rho1 + (1-p) P2 x rho2 by multi-start Nelder-Mead over the
/// 9 free parameters (measurement axis, p, two Bloch vectors). Starts include
/// the x/y/z post-measurement states plus `restarts` random draws from rng.
double trace_distance_discord_oracle(const DensityMatrix& rho, int restarts, double tol,
                                     std::mt19937_64& rng);

/// All four quantifiers from the closed forms.
ResourceReport resource_report(const XState& x);

/// Uniform sampler over valid X states (Dirichlet populations, coherences
/// uniform inside their positivity bounds). Test and oracle helper.
XState random_xstate(std::mt19937_64& rng);

}  // namespace qrel
