#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "projdist/complex_matrix.hpp"
#include "projdist/halmos.hpp"
#include "projdist/settings.hpp"

namespace projdist {

// One point of the feasible family: a support bit and a phase angle per
// distinct eigenvalue of H. Storing the phase as an angle makes unimodularity
// structural instead of a runtime check.
struct FamilyElement {
    std::vector<bool> chi;
    std::vector<double> omega; // angles in [0, 2*pi)

    // chi identically 1, omega identically 0: the pattern that attains the
    // minimum distance.
    static FamilyElement all_ones(std::size_t clusters) {
        return FamilyElement{std::vector<bool>(clusters, true),
                             std::vector<double>(clusters, 0.0)};
    }
};

// General element of the operator algebra of (e, u): four scalars on the
// intersection summands plus a 2x2 table of functions sampled on the distinct
// eigenvalues of H.
struct WStarElement {
    Complex a00{0.0, 0.0};
    Complex a01{0.0, 0.0};
    Complex a10{0.0, 0.0};
    Complex a11{0.0, 0.0};
    std::vector<Complex> phi00;
    std::vector<Complex> phi01;
    std::vector<Complex> phi10;
    std::vector<Complex> phi11;
};

struct ConditionCheck {
    bool ok = true;
    double scalar_residual = 0.0;          // worst violation among a_ij constraints
    std::vector<double> point_residuals;   // worst violation per spectral point
    double max_residual() const;
};

// The phi table induced by a family element:
// phi00 = phi11 = chi/2, phi01 = chi*e^{i omega}/2, phi10 = conj(phi01),
// all four scalars zero.
WStarElement wstar_from_family(const FamilyElement& fe);

// q in original coordinates: zero on the four intersection summands and the
// half-chi/half-chi-omega block pattern on M + M. Throws LengthMismatch when
// fe does not match the spectrum of cf.
ComplexMatrix build_family_element(const CanonicalForm& cf, const FamilyElement& fe,
                                   const Settings& settings = default_settings());

// Assembles the full matrix of a general algebra element in the original
// coordinates; the per-cluster tables must match the spectrum of cf.
ComplexMatrix assemble_wstar(const CanonicalForm& cf, const WStarElement& w,
                             const Settings& settings = default_settings());

// Scalar-level test that an algebra element is an orthogonal projection:
// a_ij in {0,1}; phi00, phi11 real; phi10 = conj(phi01);
// phi00 - phi00^2 = phi11 - phi11^2 = |phi01|^2; (phi00 + phi11 - 1) phi01 = 0.
ConditionCheck check_projection_conditions(const WStarElement& w,
                                           const Settings& settings = default_settings());

// Scalar-level test of q u q = 0:
// phi00^2 = phi11^2 = phi01 phi10; (phi00 - phi11) phi01 = (phi00 - phi11) phi10 = 0;
// a00 = a11 = 0. a01 and a10 are left to the assembled-matrix residual, which
// is where candidates carrying them get rejected.
ConditionCheck check_orthogonality_conditions(const WStarElement& w,
                                              const Settings& settings = default_settings());

// The solved form of the two condition systems: every solution is a
// FamilyElement and every FamilyElement solves them.
struct FamilySolutionSpace {
    std::vector<double> spectral_points; // distinct eigenvalues of H, ascending
    std::size_t cluster_count() const { return spectral_points.size(); }
    std::size_t chi_pattern_count() const { return std::size_t{1} << spectral_points.size(); }
    std::string description() const;
};

FamilySolutionSpace solve_family(const CanonicalForm& cf);

// Feasibility residuals of a candidate matrix: hermiticity, idempotency and
// q u q, all in the operator norm.
struct FeasibilityResiduals {
    double hermiticity = 0.0;
    double idempotency = 0.0;
    double orthogonality = 0.0;
    double max() const;
};

FeasibilityResiduals feasibility_residuals(const ComplexMatrix& q, const ComplexMatrix& u,
                                           const Settings& settings = default_settings());

} // namespace projdist
