#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "projdist/complex_matrix.hpp"
#include "projdist/family.hpp"
#include "projdist/halmos.hpp"
#include "projdist/settings.hpp"

namespace projdist {

// Everything the distance computation establishes for one (e, u) pair.
struct DistanceReport {
    double b = 0.0;        // ||eue||
    bool case_one = false; // ran(e) meets an eigenspace of u non-trivially
    double d = 0.0;

    // Case 2 minimizer in original coordinates. Absent in Case 1, where every
    // feasible q attains ||e - q|| = 1 and q = 0 serves as a non-unique
    // witness.
    std::optional<ComplexMatrix> q0;

    double residual_projection = 0.0;    // max of hermiticity and idempotency of q0 (or the witness)
    double residual_orthogonality = 0.0; // ||q0 u q0||
    double residual_distance = 0.0;      // | ||e - q0|| - d |

    // ||q0(canonical) - q0(inverse-square-root route)|| when both ran.
    std::optional<double> minimizer_route_gap;

    // | ||eue|| - max_t |2t - 1| | over the recovered spectrum (Case 2 only).
    std::optional<double> norm_identity_gap;

    std::array<std::size_t, 4> intersection_dims{0, 0, 0, 0}; // m00 m01 m10 m11
    std::size_t generic_dim = 0;
    std::vector<std::pair<double, std::size_t>> spectrum; // (value, multiplicity)

    // Filled by callers that run the exhaustive search (the CLI's --oracle).
    std::optional<double> oracle_minimum;
    std::optional<FamilyElement> oracle_argmin;
};

// ||e u e||. The overload taking a canonical form additionally checks the
// identity ||eue|| = max over the spectrum of |2t - 1| (valid when
// m00 = m11 = 0) and throws InternalError if the two routes disagree beyond
// settings.residual_tol.
double eue_norm(const ComplexMatrix& e, const ComplexMatrix& u,
                const Settings& settings = default_settings());
double eue_norm(const ComplexMatrix& e, const ComplexMatrix& u, const CanonicalForm& cf,
                const Settings& settings = default_settings());

// 1 in Case 1, sqrt((1 - sqrt(1 - b^2)) / 2) otherwise. Throws OutOfRange for
// b outside [0, 1] beyond 1e-12.
double distance_formula(double b, bool case_one);

// The family element with chi = 1, omega = 1 in the original coordinates.
// Throws CaseOneError when m00 or m11 is non-trivial.
ComplexMatrix minimizer_canonical(const CanonicalForm& cf,
                                  const Settings& settings = default_settings());

// The same minimizer through z = (e - u e u*)/2 and the inverse square root
// of z^2 on its support; never touches the canonical decomposition. Throws
// NormTooLarge when ||eue|| > 1 - settings.boundary_margin.
ComplexMatrix minimizer_cstar(const ComplexMatrix& e, const ComplexMatrix& u,
                              const Settings& settings = default_settings());

// Quadratic a-priori bound (1/2) b + 4 b^2, valid only for b below
// walters_validity_limit(); empty otherwise.
std::optional<double> walters_bound(double b);

// Hypothesis threshold of the bound.
double walters_validity_limit(); // 0.455

// Where the bound reaches 1 and stops saying anything: the positive root of
// 8 x^2 + x - 2, computed as (sqrt(65) - 1) / 16.
double walters_unit_crossing();

DistanceReport full_report(const ComplexMatrix& e, const ComplexMatrix& u,
                           const Settings& settings = default_settings());

} // namespace projdist
