#include "projdist/halmos.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "projdist/errors.hpp"

namespace projdist {

namespace {

double involution_residual(const ComplexMatrix& u) {
    const ComplexMatrix i = ComplexMatrix::identity(u.rows());
    return std::max((u * u - i).frobenius_norm(), (u - u.adjoint()).frobenius_norm());
}

} // namespace

std::size_t CanonicalForm::ambient_dimension() const {
    std::size_t n = 0;
    for (const ComplexMatrix* b :
         {&basis_m00, &basis_m01, &basis_m10, &basis_m11, &basis_m_plus, &basis_m_minus})
        n = std::max(n, b->rows());
    return n;
}

ComplexMatrix CanonicalForm::concatenated_basis() const {
    return ComplexMatrix::hstack(
        {basis_m00, basis_m01, basis_m10, basis_m11, basis_m_plus, basis_m_minus});
}

std::vector<double> CanonicalForm::h_eigenvalues() const {
    std::vector<double> values;
    for (const auto& datum : h_spectrum)
        values.insert(values.end(), datum.multiplicity, datum.value);
    return values;
}

std::vector<double> CanonicalForm::distinct_h_values() const {
    std::vector<double> values;
    values.reserve(h_spectrum.size());
    for (const auto& datum : h_spectrum) values.push_back(datum.value);
    return values;
}

void require_projection(const ComplexMatrix& e, const Settings& settings) {
    if (!e.is_square()) throw NotProjection("projection must be square");
    if (!e.is_finite()) throw NotProjection("projection has non-finite entries");
    const double scale = std::max(1.0, e.frobenius_norm());
    const double herm = (e - e.adjoint()).frobenius_norm();
    const double idem = (e * e - e).frobenius_norm();
    if (!(herm <= settings.validation_tol * scale))
        throw NotProjection("hermitian residual " + std::to_string(herm));
    if (!(idem <= settings.validation_tol * scale))
        throw NotProjection("idempotency residual " + std::to_string(idem));
}

void require_involution(const ComplexMatrix& u, const Settings& settings) {
    if (!u.is_square()) throw NotInvolution("involution must be square");
    if (!u.is_finite()) throw NotInvolution("involution has non-finite entries");
    const double scale = std::max(1.0, u.frobenius_norm());
    if (!(involution_residual(u) <= settings.validation_tol * scale))
        throw NotInvolution("involution residual " + std::to_string(involution_residual(u)));
}

void require_compatible_pair(const ComplexMatrix& e, const ComplexMatrix& u,
                             const Settings& settings) {
    if (e.rows() != u.rows() || e.cols() != u.cols())
        throw DimensionMismatch("projection and involution dimensions differ");
    require_projection(e, settings);
    require_involution(u, settings);
}

std::pair<ComplexMatrix, ComplexMatrix> eigenspaces_of_involution(const ComplexMatrix& u,
                                                                  const Settings& settings) {
    require_involution(u, settings);
    const ComplexMatrix i = ComplexMatrix::identity(u.rows());
    ComplexMatrix basis_plus = orthonormal_null_basis(u - i, settings);
    ComplexMatrix basis_minus = orthonormal_null_basis(u + i, settings);
    if (basis_plus.cols() + basis_minus.cols() != u.rows())
        throw NotInvolution("eigenspaces of +1 and -1 do not fill the space");
    return {std::move(basis_plus), std::move(basis_minus)};
}

CanonicalForm canonical_decomposition(const ComplexMatrix& e, const ComplexMatrix& u,
                                      const Settings& settings) {
    require_compatible_pair(e, u, settings);
    const std::size_t n = e.rows();
    const ComplexMatrix id = ComplexMatrix::identity(n);

    CanonicalForm cf;
    // Each intersection is the kernel of one vertically stacked system, so the
    // rank decision happens in a single pass.
    cf.basis_m00 = orthonormal_null_basis(ComplexMatrix::vstack({e - id, u - id}), settings);
    cf.basis_m01 = orthonormal_null_basis(ComplexMatrix::vstack({e, u - id}), settings);
    cf.basis_m10 = orthonormal_null_basis(ComplexMatrix::vstack({e, u + id}), settings);
    cf.basis_m11 = orthonormal_null_basis(ComplexMatrix::vstack({e - id, u + id}), settings);

    // M = H+ minus the two intersections living inside it.
    const ComplexMatrix m_system = ComplexMatrix::vstack(
        {u - id, cf.basis_m00.adjoint(), cf.basis_m01.adjoint()});
    ComplexMatrix m_raw = orthonormal_null_basis(m_system, settings);
    const std::size_t m = m_raw.cols();

    if (m > 0) {
        // Compression of e onto M, diagonalized so the M frame carries H as a
        // diagonal matrix with ascending eigenvalues.
        const ComplexMatrix h = m_raw.adjoint() * (e * m_raw);
        const EigenSystem h_eigen = hermitian_eigendecomposition(h, settings);
        const double window = settings.degenerate_spectrum_factor * settings.cluster_tol;
        for (double t : h_eigen.eigenvalues) {
            if (!(t > window && t < 1.0 - window))
                throw DegenerateSpectrum(
                    "generic-part eigenvalue " + std::to_string(t) +
                    " is within " + std::to_string(window) + " of 0 or 1");
        }
        cf.basis_m_plus = m_raw * h_eigen.vectors;

        // Paired copy: (I - P+) e B_M (H(I-H))^{-1/2}, with P+ = (I + u)/2.
        const ComplexMatrix p_minus = (id - u) * Complex{0.5, 0.0};
        ComplexMatrix image = p_minus * (e * cf.basis_m_plus);
        for (std::size_t j = 0; j < m; ++j) {
            const double t = h_eigen.eigenvalues[j];
            const double inv = 1.0 / std::sqrt(t * (1.0 - t));
            for (std::size_t i = 0; i < n; ++i) image(i, j) = image(i, j) * inv;
        }
        cf.basis_m_minus = std::move(image);

        const auto clusters = cluster_eigenvalues(h_eigen.eigenvalues, settings.cluster_tol);
        for (const auto& c : clusters) {
            SpectralDatum datum;
            datum.value = c.value;
            datum.multiplicity = c.end - c.begin;
            datum.vectors = ComplexMatrix(m, datum.multiplicity);
            for (std::size_t k = 0; k < datum.multiplicity; ++k)
                datum.vectors(c.begin + k, k) = Complex{1.0, 0.0};
            cf.h_spectrum.push_back(std::move(datum));
        }
    } else {
        cf.basis_m_plus = ComplexMatrix(n, 0);
        cf.basis_m_minus = ComplexMatrix(n, 0);
    }

    const std::size_t total = cf.dim_m00() + cf.dim_m01() + cf.dim_m10() + cf.dim_m11() +
                              2 * cf.dim_m();
    if (total != n)
        throw DegenerateSpectrum("decomposition dimensions sum to " + std::to_string(total) +
                                 " instead of " + std::to_string(n) +
                                 "; tolerances are misconfigured for this input");
    return cf;
}

std::pair<ComplexMatrix, ComplexMatrix> reconstruct(const CanonicalForm& cf) {
    const std::size_t n = cf.ambient_dimension();
    const std::size_t d00 = cf.dim_m00(), d01 = cf.dim_m01(), d10 = cf.dim_m10(),
                      d11 = cf.dim_m11(), m = cf.dim_m();
    if (d00 + d01 + d10 + d11 + 2 * m != n)
        throw DimensionMismatch("canonical form does not fill the ambient space");

    const std::vector<double> h = cf.h_eigenvalues();
    ComplexMatrix e_canon(n, n);
    ComplexMatrix u_canon(n, n);
    std::size_t at = 0;
    for (std::size_t i = 0; i < d00; ++i, ++at) {
        e_canon(at, at) = 1.0;
        u_canon(at, at) = 1.0;
    }
    for (std::size_t i = 0; i < d01; ++i, ++at) u_canon(at, at) = 1.0;
    for (std::size_t i = 0; i < d10; ++i, ++at) u_canon(at, at) = -1.0;
    for (std::size_t i = 0; i < d11; ++i, ++at) {
        e_canon(at, at) = 1.0;
        u_canon(at, at) = -1.0;
    }
    const std::size_t plus_at = at;
    const std::size_t minus_at = at + m;
    for (std::size_t i = 0; i < m; ++i) {
        const double t = h[i];
        const double s = std::sqrt(t * (1.0 - t));
        e_canon(plus_at + i, plus_at + i) = t;
        e_canon(plus_at + i, minus_at + i) = s;
        e_canon(minus_at + i, plus_at + i) = s;
        e_canon(minus_at + i, minus_at + i) = 1.0 - t;
        u_canon(plus_at + i, plus_at + i) = 1.0;
        u_canon(minus_at + i, minus_at + i) = -1.0;
    }

    const ComplexMatrix w = cf.concatenated_basis();
    const ComplexMatrix w_adj = w.adjoint();
    return {w * (e_canon * w_adj), w * (u_canon * w_adj)};
}

} // namespace projdist
