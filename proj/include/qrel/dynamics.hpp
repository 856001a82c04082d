#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "qrel/qmat.hpp"

namespace qrel {

/// Dissipator coefficients: X_ij = gamma_plus d_ij - i gamma_minus eps_ijk r_k
/// + gamma_zero r_i r_j. gamma_plus sets the relaxation timescale; only the
/// ratio gamma_minus/gamma_plus reaches the equilibrium family.
struct KossakowskiSpec {
    double gamma_plus = 1.0;
    double gamma_minus = 0.0;
    double gamma_zero = 0.0;
    std::array<double, 3> r = {0.0, 0.0, 1.0};

    void validate() const;
};

struct EvolutionConfig {
    double dt = 0.0;               // <= 0 selects the stability default 0.01/(6 gamma_plus)
    double max_time = 200.0;
    double convergence_tol = 1e-9; // stop when ||rhs||_F drops below this
};

struct TrajectorySample {
    double t = 0.0;
    Matrix rho;
    double kappa0 = 0.0;
    double rhs_norm = 0.0;
};

struct EvolutionResult {
    DensityMatrix rho_final;
    std::vector<TrajectorySample> trajectory;
    bool converged = false;
    double elapsed = 0.0;
};

/// The 3x3 coefficient matrix itself.
Matrix kossakowski_matrix(const KossakowskiSpec& spec);

/// Generator of the two-detector master equation with a common bath:
/// -i[H,rho] + sum_ij (X_ij/2)(2 J_j rho J_i - {J_i J_j, rho}) with collective
/// J_i = tau_i x 1 + 1 x tau_i and H = (epsilon/2) sum_j r_j J_j (bare level
/// spacing; no Lamb shift). Traceless and Hermitian by construction.
Matrix lindblad_rhs(const DensityMatrix& rho, const KossakowskiSpec& spec, double epsilon);

/// Conserved initial-state invariant sum_i Tr[rho (tau_i x tau_i)] in [-3,1].
double kappa0_of(const DensityMatrix& rho);

/// Fixed-step classical RK4 on the vectorized generator. Each step symmetrizes
/// and renormalizes the state; trajectory samples are kept every ~0.1 time
/// units. converged=false means max_time was hit first.
EvolutionResult evolve(const DensityMatrix& rho0, const KossakowskiSpec& spec, double epsilon,
                       const EvolutionConfig& cfg);

/// CSV rows (t, 16 real components, kappa0, rhs_norm), header included.
void write_trajectory_csv(std::ostream& out, const std::vector<TrajectorySample>& trajectory);

}  // namespace qrel
