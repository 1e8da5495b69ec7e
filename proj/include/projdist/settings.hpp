#pragma once

#include <cstddef>

namespace projdist {

// All tunable tolerances in one place. The spectra handled by this library
// live in [-1, 1], so the constants below are absolute unless stated.
struct Settings {
    // Input validation: accepted residual for "hermitian", "idempotent" and
    // "squares to the identity" checks. Loose enough to admit matrices that
    // went through a decimal file round trip.
    double validation_tol = 1e-8;

    // Jacobi eigensolver: stop once the off-diagonal Frobenius mass drops
    // below eigen_convergence * ||A||_F, give up after eigen_sweep_budget
    // full sweeps.
    double eigen_convergence = 1e-14;
    int eigen_sweep_budget = 30;

    // One-sided Jacobi SVD: per-pair orthogonality target and sweep budget.
    double svd_convergence = 1e-15;
    int svd_sweep_budget = 60;

    // Eigenvalues closer than this collapse into one spectral point.
    double cluster_tol = 1e-8;

    // A singular value sigma counts as zero when
    // sigma <= rank_tol * max(rows, cols) * sigma_max.
    double rank_tol = 1e-10;

    // Accepted residual for feasibility checks on assembled matrices
    // (q^2 - q, q - q*, quq) and for internal identity cross-checks.
    double residual_tol = 1e-10;

    // Refuse the inverse-square-root minimizer route when
    // ||eue|| > 1 - boundary_margin.
    double boundary_margin = 1e-6;

    // Eigenvalues of the generic-part operator within
    // degenerate_spectrum_factor * cluster_tol of 0 or 1 raise
    // DegenerateSpectrum.
    double degenerate_spectrum_factor = 10.0;

    // Exhaustive search caps out at 2^chi_enumeration_cap chi patterns.
    std::size_t chi_enumeration_cap = 20;
};

inline const Settings& default_settings() {
    static const Settings s{};
    return s;
}

} // namespace projdist
