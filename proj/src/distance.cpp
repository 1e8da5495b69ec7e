#include "projdist/distance.hpp"

#include <cmath>
#include <string>

#include "projdist/eigen.hpp"
#include "projdist/errors.hpp"

namespace projdist {

namespace {

double spectral_eue_norm(const CanonicalForm& cf) {
    double worst = 0.0;
    for (const auto& datum : cf.h_spectrum)
        worst = std::max(worst, std::abs(2.0 * datum.value - 1.0));
    return worst;
}

} // namespace

double eue_norm(const ComplexMatrix& e, const ComplexMatrix& u, const Settings& settings) {
    require_compatible_pair(e, u, settings);
    return operator_norm(e * (u * e), settings);
}

double eue_norm(const ComplexMatrix& e, const ComplexMatrix& u, const CanonicalForm& cf,
                const Settings& settings) {
    const double direct = eue_norm(e, u, settings);
    if (!cf.case_one()) {
        const double via_spectrum = spectral_eue_norm(cf);
        if (!(std::abs(direct - via_spectrum) <= settings.residual_tol))
            throw InternalError("norm identity violated: ||eue|| = " + std::to_string(direct) +
                                " vs spectral " + std::to_string(via_spectrum));
    }
    return direct;
}

double distance_formula(double b, bool case_one) {
    if (!(b >= -1e-12 && b <= 1.0 + 1e-12))
        throw OutOfRange("norm argument " + std::to_string(b) + " outside [0, 1]");
    if (case_one) return 1.0;
    b = std::min(std::max(b, 0.0), 1.0);
    return std::sqrt(0.5 * (1.0 - std::sqrt(1.0 - b * b)));
}

ComplexMatrix minimizer_canonical(const CanonicalForm& cf, const Settings& settings) {
    if (cf.case_one())
        throw CaseOneError("no minimizer is constructed when ran(e) meets an eigenspace of u");
    return build_family_element(cf, FamilyElement::all_ones(cf.h_spectrum.size()), settings);
}

ComplexMatrix minimizer_cstar(const ComplexMatrix& e, const ComplexMatrix& u,
                              const Settings& settings) {
    require_compatible_pair(e, u, settings);
    const double b = operator_norm(e * (u * e), settings);
    if (!(b <= 1.0 - settings.boundary_margin))
        throw NormTooLarge("||eue|| = " + std::to_string(b) +
                           " too close to 1 for the inverse-square-root route");

    const std::size_t n = e.rows();
    const ComplexMatrix z = (e - u * (e * u.adjoint())) * Complex{0.5, 0.0};
    const EigenSystem z_eigen = hermitian_eigendecomposition(z, settings);

    double top = 0.0;
    for (double v : z_eigen.eigenvalues) top = std::max(top, std::abs(v));
    const double cutoff = settings.rank_tol * static_cast<double>(n) * top;

    // sign(z) = z (z^2)^{-1/2} on the support of z, and the support projector
    // itself; q0 = (support + sign)/2 restricts to (I + z(z^2)^{-1/2})/2 there
    // and vanishes elsewhere.
    ComplexMatrix scaled_sign = z_eigen.vectors;
    ComplexMatrix scaled_support = z_eigen.vectors;
    for (std::size_t j = 0; j < n; ++j) {
        const double lambda = z_eigen.eigenvalues[j];
        const double sign = std::abs(lambda) <= cutoff ? 0.0 : (lambda > 0.0 ? 1.0 : -1.0);
        const double supp = sign == 0.0 ? 0.0 : 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            scaled_sign(i, j) = scaled_sign(i, j) * sign;
            scaled_support(i, j) = scaled_support(i, j) * supp;
        }
    }
    const ComplexMatrix v_adj = z_eigen.vectors.adjoint();
    const ComplexMatrix sign_z = scaled_sign * v_adj;
    const ComplexMatrix support = scaled_support * v_adj;
    return (support + sign_z) * Complex{0.5, 0.0};
}

std::optional<double> walters_bound(double b) {
    if (!(b < walters_validity_limit())) return std::nullopt;
    return 0.5 * b + 4.0 * b * b;
}

double walters_validity_limit() { return 0.455; }

double walters_unit_crossing() { return (std::sqrt(65.0) - 1.0) / 16.0; }

DistanceReport full_report(const ComplexMatrix& e, const ComplexMatrix& u,
                           const Settings& settings) {
    require_compatible_pair(e, u, settings);
    const CanonicalForm cf = canonical_decomposition(e, u, settings);

    DistanceReport report;
    report.case_one = cf.case_one();
    report.intersection_dims = {cf.dim_m00(), cf.dim_m01(), cf.dim_m10(), cf.dim_m11()};
    report.generic_dim = cf.dim_m();
    for (const auto& datum : cf.h_spectrum)
        report.spectrum.emplace_back(datum.value, datum.multiplicity);

    report.b = operator_norm(e * (u * e), settings);
    report.d = distance_formula(report.b, report.case_one);

    if (report.case_one) {
        // Witness q = 0: feasible, attains ||e - 0|| = 1, not unique.
        report.residual_projection = 0.0;
        report.residual_orthogonality = 0.0;
        report.residual_distance = std::abs(operator_norm(e, settings) - report.d);
        return report;
    }

    report.norm_identity_gap = std::abs(report.b - spectral_eue_norm(cf));

    const ComplexMatrix q0 = minimizer_canonical(cf, settings);
    const FeasibilityResiduals residuals = feasibility_residuals(q0, u, settings);
    report.residual_projection = std::max(residuals.hermiticity, residuals.idempotency);
    report.residual_orthogonality = residuals.orthogonality;
    report.residual_distance = std::abs(operator_norm(e - q0, settings) - report.d);

    if (report.b <= 1.0 - settings.boundary_margin) {
        const ComplexMatrix q0_alt = minimizer_cstar(e, u, settings);
        report.minimizer_route_gap = operator_norm(q0 - q0_alt, settings);
    }
    report.q0 = q0;
    return report;
}

} // namespace projdist
