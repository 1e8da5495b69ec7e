#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "projdist/complex_matrix.hpp"
#include "projdist/family.hpp"
#include "projdist/halmos.hpp"
#include "projdist/settings.hpp"

namespace projdist {

// Ground-truth recipe for a random test instance: intersection dimensions,
// the spectrum of the generic part, and the seed of the conjugating unitary.
struct InstanceSpec {
    std::size_t dim_m00 = 0;
    std::size_t dim_m01 = 0;
    std::size_t dim_m10 = 0;
    std::size_t dim_m11 = 0;
    std::vector<std::pair<double, std::size_t>> spectrum; // (value in (0,1), multiplicity)
    std::uint64_t seed = 0;
};

struct GeneratedInstance {
    ComplexMatrix e;
    ComplexMatrix u;
    CanonicalForm ground_truth;
};

// The positive eigenvalue of the 2x2 block of e - q at spectral point t:
// 1 when chi = 0, sqrt(1/2 - sqrt(t(1-t)) cos(omega_angle)) when chi = 1.
double lambda_eigenvalue(double t, bool chi, double omega_angle);

// Same quantity read off the assembled 2x2 block; exists so the closed form
// above can be checked against plain numerics.
double lambda_eigenvalue_numeric(double t, bool chi, double omega_angle,
                                 const Settings& settings = default_settings());

struct OracleResult {
    double min_value = 0.0;
    FamilyElement argmin;
};

// Exhaustive minimum of ||e - q|| over the feasible family: every chi pattern
// (lexicographic order), and per spectral point every angle of a uniform
// omega_grid-point grid plus the analytic optimum 0. Cross-checks the
// lambda-based minimum against ||e - q|| on the assembled argmin matrix.
// Throws CaseOneError outside Case 2 and TooManyClusters past the cap.
OracleResult oracle_distance(const CanonicalForm& cf, std::size_t omega_grid,
                             const Settings& settings = default_settings());

// The full feasible set for e = diag(1,0,0), u = diag(1,1,-1) — no algebra
// constraint — parametrized by |x|^2 + |y|^2 = 1. Returns the assembled q and
// ||e - q||, verified against sqrt((1 + |y|^2)/2).
struct GeneralFamilyPoint {
    ComplexMatrix q;
    double distance = 0.0;
};

GeneralFamilyPoint general_family_3x3(Complex x, Complex y,
                                      const Settings& settings = default_settings());

// Deterministic seeded instance: canonical blocks conjugated by a
// pseudo-random unitary. Throws BadSpec when the spec violates its
// invariants.
GeneratedInstance random_instance(const InstanceSpec& spec,
                                  const Settings& settings = default_settings());

// Seeded Haar-ish unitary (orthonormalized complex Gaussian); exposed for
// invariance tests.
ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed);

} // namespace projdist
