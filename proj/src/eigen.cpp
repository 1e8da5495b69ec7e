#include "projdist/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "projdist/errors.hpp"

namespace projdist {

namespace {

// Real rotation parameters (c, s, t) zeroing the off-diagonal of the
// symmetric 2x2 [[a, r], [r, b]], r > 0, via tau = (b - a) / (2r).
struct Rotation {
    double c;
    double s;
    double t;
};

Rotation jacobi_rotation(double a, double b, double r) {
    const double tau = (b - a) / (2.0 * r);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    return Rotation{c, t * c, t};
}

double offdiagonal_mass(const ComplexMatrix& w) {
    double s = 0.0;
    for (std::size_t i = 0; i < w.rows(); ++i)
        for (std::size_t j = 0; j < w.cols(); ++j)
            if (i != j) s += std::norm(w(i, j));
    return std::sqrt(s);
}

void sort_columns_by_key(std::vector<double>& keys, ComplexMatrix& m, bool ascending) {
    std::vector<std::size_t> order(keys.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return ascending ? keys[a] < keys[b] : keys[a] > keys[b];
    });
    std::vector<double> sorted_keys(keys.size());
    ComplexMatrix sorted(m.rows(), m.cols());
    for (std::size_t j = 0; j < order.size(); ++j) {
        sorted_keys[j] = keys[order[j]];
        for (std::size_t i = 0; i < m.rows(); ++i) sorted(i, j) = m(i, order[j]);
    }
    keys = std::move(sorted_keys);
    m = std::move(sorted);
}

} // namespace

EigenSystem hermitian_eigendecomposition(const ComplexMatrix& a, const Settings& settings) {
    if (!a.is_square()) throw DimensionMismatch("eigendecomposition requires a square matrix");
    if (!a.is_finite()) throw NotHermitian("matrix has non-finite entries");

    const std::size_t n = a.rows();
    const double scale = a.frobenius_norm();
    const double herm_residual = (a - a.adjoint()).frobenius_norm();
    // Written so that a NaN residual also trips the throw.
    if (!(herm_residual <= settings.validation_tol * std::max(scale, 1.0)))
        throw NotHermitian("hermitian residual " + std::to_string(herm_residual));

    ComplexMatrix w = (a + a.adjoint()) * Complex{0.5, 0.0};
    ComplexMatrix v = ComplexMatrix::identity(n);

    bool converged = n < 2 || scale == 0.0;
    for (int sweep = 0; sweep < settings.eigen_sweep_budget && !converged; ++sweep) {
        if (offdiagonal_mass(w) <= settings.eigen_convergence * scale) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex g = w(p, q);
                const double r = std::abs(g);
                if (r == 0.0) continue;
                // Peel the phase off w(p,q), then rotate in the real plane.
                const Complex phase = g / r;
                const Rotation rot = jacobi_rotation(w(p, p).real(), w(q, q).real(), r);
                const Complex up_q = Complex{rot.s, 0.0};            // column factor on p
                const Complex uq_q = rot.c * std::conj(phase);       // column factor on q
                const Complex up_p = Complex{rot.c, 0.0};
                const Complex uq_p = -rot.s * std::conj(phase);
                // W <- W U (columns p, q).
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex wp = w(i, p), wq = w(i, q);
                    w(i, p) = up_p * wp + uq_p * wq;
                    w(i, q) = up_q * wp + uq_q * wq;
                }
                // W <- U* W (rows p, q).
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex wp = w(p, j), wq = w(q, j);
                    w(p, j) = std::conj(up_p) * wp + std::conj(uq_p) * wq;
                    w(q, j) = std::conj(up_q) * wp + std::conj(uq_q) * wq;
                }
                w(p, q) = Complex{0.0, 0.0};
                w(q, p) = Complex{0.0, 0.0};
                w(p, p) = Complex{w(p, p).real(), 0.0};
                w(q, q) = Complex{w(q, q).real(), 0.0};
                // V <- V U.
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex vp = v(i, p), vq = v(i, q);
                    v(i, p) = up_p * vp + uq_p * vq;
                    v(i, q) = up_q * vp + uq_q * vq;
                }
            }
        }
    }
    if (!converged && offdiagonal_mass(w) > settings.eigen_convergence * scale)
        throw NonConvergence("Jacobi eigensolver exceeded its sweep budget");

    std::vector<double> eigenvalues(n);
    for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = w(i, i).real();
    sort_columns_by_key(eigenvalues, v, /*ascending=*/true);
    return EigenSystem{std::move(eigenvalues), std::move(v)};
}

SingularSystem singular_values_and_right_vectors(const ComplexMatrix& a, const Settings& settings) {
    if (!a.is_finite()) throw ValidationError("matrix has non-finite entries");
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    ComplexMatrix w = a;
    ComplexMatrix v = ComplexMatrix::identity(n);

    if (n > 0 && m > 0) {
        // Pair tolerance grows with sqrt(m) so rounding noise in long columns
        // cannot keep the sweep alive forever.
        const double pair_tol = settings.svd_convergence * std::sqrt(static_cast<double>(m));
        bool converged = n < 2;
        for (int sweep = 0; sweep < settings.svd_sweep_budget && !converged; ++sweep) {
            converged = true;
            for (std::size_t p = 0; p + 1 < n; ++p) {
                for (std::size_t q = p + 1; q < n; ++q) {
                    double alpha = 0.0, beta = 0.0;
                    Complex gamma{0.0, 0.0};
                    for (std::size_t i = 0; i < m; ++i) {
                        alpha += std::norm(w(i, p));
                        beta += std::norm(w(i, q));
                        gamma += std::conj(w(i, p)) * w(i, q);
                    }
                    const double r = std::abs(gamma);
                    if (alpha == 0.0 || beta == 0.0) continue;
                    if (r <= pair_tol * std::sqrt(alpha * beta)) continue;
                    converged = false;
                    const Complex phase = gamma / r;
                    const Rotation rot = jacobi_rotation(alpha, beta, r);
                    const Complex up_p = Complex{rot.c, 0.0};
                    const Complex uq_p = -rot.s * std::conj(phase);
                    const Complex up_q = Complex{rot.s, 0.0};
                    const Complex uq_q = rot.c * std::conj(phase);
                    for (std::size_t i = 0; i < m; ++i) {
                        const Complex wp = w(i, p), wq = w(i, q);
                        w(i, p) = up_p * wp + uq_p * wq;
                        w(i, q) = up_q * wp + uq_q * wq;
                    }
                    for (std::size_t i = 0; i < n; ++i) {
                        const Complex vp = v(i, p), vq = v(i, q);
                        v(i, p) = up_p * vp + uq_p * vq;
                        v(i, q) = up_q * vp + uq_q * vq;
                    }
                }
            }
        }
        if (!converged) throw NonConvergence("one-sided Jacobi SVD exceeded its sweep budget");
    }

    std::vector<double> sigma(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += std::norm(w(i, j));
        sigma[j] = std::sqrt(s);
    }
    sort_columns_by_key(sigma, v, /*ascending=*/false);
    return SingularSystem{std::move(sigma), std::move(v)};
}

double operator_norm(const ComplexMatrix& a, const Settings& settings) {
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    const SingularSystem s = singular_values_and_right_vectors(a, settings);
    return s.singular_values.empty() ? 0.0 : s.singular_values.front();
}

ComplexMatrix orthonormal_null_basis(const ComplexMatrix& a, const Settings& settings) {
    const std::size_t n = a.cols();
    if (n == 0) return ComplexMatrix(0, 0);
    if (a.rows() == 0) return ComplexMatrix::identity(n);
    const SingularSystem s = singular_values_and_right_vectors(a, settings);
    const double sigma_max = s.singular_values.front();
    const double threshold =
        settings.rank_tol * static_cast<double>(std::max(a.rows(), a.cols())) * sigma_max;
    std::size_t rank = 0;
    while (rank < n && s.singular_values[rank] > threshold) ++rank;
    return s.right_vectors.columns(rank, n - rank);
}

std::vector<SpectralCluster> cluster_eigenvalues(const std::vector<double>& ascending_values,
                                                 double cluster_tol) {
    std::vector<SpectralCluster> clusters;
    std::size_t begin = 0;
    for (std::size_t i = 1; i <= ascending_values.size(); ++i) {
        if (i == ascending_values.size() ||
            ascending_values[i] - ascending_values[i - 1] > cluster_tol) {
            double mean = 0.0;
            for (std::size_t k = begin; k < i; ++k) mean += ascending_values[k];
            mean /= static_cast<double>(i - begin);
            clusters.push_back(SpectralCluster{begin, i, mean});
            begin = i;
        }
    }
    return clusters;
}

ComplexMatrix apply_scalar_function(const EigenSystem& system,
                                    const std::map<std::size_t, Complex>& table,
                                    const Settings& settings) {
    const std::size_t n = system.eigenvalues.size();
    const auto clusters = cluster_eigenvalues(system.eigenvalues, settings.cluster_tol);
    std::vector<Complex> per_vector(n);
    for (std::size_t k = 0; k < clusters.size(); ++k) {
        const auto it = table.find(k);
        if (it == table.end())
            throw MissingClusterValue("no value for spectral cluster " + std::to_string(k));
        for (std::size_t i = clusters[k].begin; i < clusters[k].end; ++i) per_vector[i] = it->second;
    }
    // V diag(f) V* without forming diag(f).
    ComplexMatrix scaled = system.vectors;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) scaled(i, j) = scaled(i, j) * per_vector[j];
    return scaled * system.vectors.adjoint();
}

} // namespace projdist
