#include "projdist/family.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "projdist/eigen.hpp"
#include "projdist/errors.hpp"

namespace projdist {

namespace {

// EigenSystem of H read in the M frame, where H is diagonal ascending by
// construction of the canonical form.
EigenSystem h_in_m_frame(const CanonicalForm& cf) {
    EigenSystem sys;
    sys.eigenvalues = cf.h_eigenvalues();
    sys.vectors = ComplexMatrix::identity(sys.eigenvalues.size());
    return sys;
}

std::map<std::size_t, Complex> cluster_table(const std::vector<Complex>& per_cluster) {
    std::map<std::size_t, Complex> table;
    for (std::size_t k = 0; k < per_cluster.size(); ++k) table[k] = per_cluster[k];
    return table;
}

double distance_to_zero_or_one(Complex a) {
    return std::min(std::abs(a), std::abs(a - Complex{1.0, 0.0}));
}

} // namespace

double ConditionCheck::max_residual() const {
    double r = scalar_residual;
    for (double p : point_residuals) r = std::max(r, p);
    return r;
}

double FeasibilityResiduals::max() const {
    return std::max(hermiticity, std::max(idempotency, orthogonality));
}

WStarElement wstar_from_family(const FamilyElement& fe) {
    if (fe.chi.size() != fe.omega.size())
        throw LengthMismatch("chi and omega lists differ in length");
    WStarElement w;
    const std::size_t k = fe.chi.size();
    w.phi00.resize(k);
    w.phi01.resize(k);
    w.phi10.resize(k);
    w.phi11.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        const double chi = fe.chi[j] ? 1.0 : 0.0;
        const Complex omega{std::cos(fe.omega[j]), std::sin(fe.omega[j])};
        w.phi00[j] = Complex{0.5 * chi, 0.0};
        w.phi11[j] = Complex{0.5 * chi, 0.0};
        w.phi01[j] = 0.5 * chi * omega;
        w.phi10[j] = std::conj(w.phi01[j]);
    }
    return w;
}

ComplexMatrix assemble_wstar(const CanonicalForm& cf, const WStarElement& w,
                             const Settings& settings) {
    const std::size_t clusters = cf.h_spectrum.size();
    if (w.phi00.size() != clusters || w.phi01.size() != clusters ||
        w.phi10.size() != clusters || w.phi11.size() != clusters)
        throw LengthMismatch("phi tables do not match the spectrum");

    const std::size_t n = cf.ambient_dimension();
    const std::size_t m = cf.dim_m();
    const std::size_t d00 = cf.dim_m00(), d01 = cf.dim_m01(), d10 = cf.dim_m10(),
                      d11 = cf.dim_m11();

    ComplexMatrix q_canon(n, n);
    std::size_t at = 0;
    for (std::size_t i = 0; i < d00; ++i, ++at) q_canon(at, at) = w.a00;
    for (std::size_t i = 0; i < d01; ++i, ++at) q_canon(at, at) = w.a01;
    for (std::size_t i = 0; i < d10; ++i, ++at) q_canon(at, at) = w.a10;
    for (std::size_t i = 0; i < d11; ++i, ++at) q_canon(at, at) = w.a11;

    if (m > 0) {
        const EigenSystem h = h_in_m_frame(cf);
        const ComplexMatrix b00 = apply_scalar_function(h, cluster_table(w.phi00), settings);
        const ComplexMatrix b01 = apply_scalar_function(h, cluster_table(w.phi01), settings);
        const ComplexMatrix b10 = apply_scalar_function(h, cluster_table(w.phi10), settings);
        const ComplexMatrix b11 = apply_scalar_function(h, cluster_table(w.phi11), settings);
        q_canon.set_block(at, at, b00);
        q_canon.set_block(at, at + m, b01);
        q_canon.set_block(at + m, at, b10);
        q_canon.set_block(at + m, at + m, b11);
    }

    const ComplexMatrix basis = cf.concatenated_basis();
    return basis * (q_canon * basis.adjoint());
}

ComplexMatrix build_family_element(const CanonicalForm& cf, const FamilyElement& fe,
                                   const Settings& settings) {
    if (fe.chi.size() != cf.h_spectrum.size() || fe.omega.size() != cf.h_spectrum.size())
        throw LengthMismatch("family element does not match the spectrum of the canonical form");
    return assemble_wstar(cf, wstar_from_family(fe), settings);
}

ConditionCheck check_projection_conditions(const WStarElement& w, const Settings& settings) {
    ConditionCheck check;
    for (Complex a : {w.a00, w.a01, w.a10, w.a11})
        check.scalar_residual = std::max(check.scalar_residual, distance_to_zero_or_one(a));

    const std::size_t k = w.phi00.size();
    check.point_residuals.resize(k, 0.0);
    for (std::size_t j = 0; j < k; ++j) {
        const Complex p00 = w.phi00[j], p01 = w.phi01[j], p10 = w.phi10[j], p11 = w.phi11[j];
        double r = std::abs(p00.imag());
        r = std::max(r, std::abs(p11.imag()));
        r = std::max(r, std::abs(p10 - std::conj(p01)));
        const double off = std::norm(p01);
        r = std::max(r, std::abs(p00 - p00 * p00 - Complex{off, 0.0}));
        r = std::max(r, std::abs(p11 - p11 * p11 - Complex{off, 0.0}));
        r = std::max(r, std::abs((p00 + p11 - Complex{1.0, 0.0}) * p01));
        check.point_residuals[j] = r;
    }
    check.ok = check.max_residual() <= settings.residual_tol;
    return check;
}

ConditionCheck check_orthogonality_conditions(const WStarElement& w, const Settings& settings) {
    ConditionCheck check;
    check.scalar_residual = std::max(std::abs(w.a00), std::abs(w.a11));

    const std::size_t k = w.phi00.size();
    check.point_residuals.resize(k, 0.0);
    for (std::size_t j = 0; j < k; ++j) {
        const Complex p00 = w.phi00[j], p01 = w.phi01[j], p10 = w.phi10[j], p11 = w.phi11[j];
        double r = std::abs(p00 * p00 - p11 * p11);
        r = std::max(r, std::abs(p00 * p00 - p01 * p10));
        r = std::max(r, std::abs((p00 - p11) * p01));
        r = std::max(r, std::abs((p00 - p11) * p10));
        check.point_residuals[j] = r;
    }
    check.ok = check.max_residual() <= settings.residual_tol;
    return check;
}

std::string FamilySolutionSpace::description() const {
    if (spectral_points.empty())
        return "generic part is trivial; the only feasible element is q = 0";
    std::string text = "chi in {0,1}^" + std::to_string(spectral_points.size()) + " (" +
                       std::to_string(chi_pattern_count()) +
                       " patterns), omega angle in [0,2pi) per spectral point; "
                       "all intersection-summand scalars are 0";
    return text;
}

FamilySolutionSpace solve_family(const CanonicalForm& cf) {
    return FamilySolutionSpace{cf.distinct_h_values()};
}

FeasibilityResiduals feasibility_residuals(const ComplexMatrix& q, const ComplexMatrix& u,
                                           const Settings& settings) {
    FeasibilityResiduals r;
    r.hermiticity = operator_norm(q - q.adjoint(), settings);
    r.idempotency = operator_norm(q * q - q, settings);
    r.orthogonality = operator_norm(q * (u * q), settings);
    return r;
}

} // namespace projdist
