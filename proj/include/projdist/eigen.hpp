#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "projdist/complex_matrix.hpp"
#include "projdist/settings.hpp"

namespace projdist {

// Result of a hermitian eigendecomposition: A = V diag(lambda) V*.
// Eigenvalues ascending, columns of `vectors` aligned with them.
struct EigenSystem {
    std::vector<double> eigenvalues;
    ComplexMatrix vectors;
};

// Cyclic complex Jacobi. Throws NotHermitian when
// ||A - A*||_F > validation_tol * ||A||_F, NonConvergence past the sweep
// budget. Reconstruction residual is below 1e-12 * ||A|| for the dimensions
// this library targets (<= ~10^3).
EigenSystem hermitian_eigendecomposition(const ComplexMatrix& a,
                                         const Settings& settings = default_settings());

// Singular values (descending) and right singular vectors of a rectangular
// matrix, via one-sided Jacobi. V is exactly unitary up to rounding, which is
// what makes the null bases below orthonormal without cleanup.
struct SingularSystem {
    std::vector<double> singular_values;
    ComplexMatrix right_vectors;
};

SingularSystem singular_values_and_right_vectors(const ComplexMatrix& a,
                                                 const Settings& settings = default_settings());

// Largest singular value; for hermitian input this is max |eigenvalue|.
double operator_norm(const ComplexMatrix& a, const Settings& settings = default_settings());

// Orthonormal basis of the numerical kernel: columns B with A B ~ 0 and
// B* B = I. A singular value counts as zero when
// sigma <= rank_tol * max(rows, cols) * sigma_max. May have zero columns.
ComplexMatrix orthonormal_null_basis(const ComplexMatrix& a,
                                     const Settings& settings = default_settings());

// Contiguous run [begin, end) in an ascending eigenvalue list that counts as
// one spectral point; `value` is the mean over the run.
struct SpectralCluster {
    std::size_t begin;
    std::size_t end;
    double value;
};

// Chain clustering: a gap wider than cluster_tol starts a new cluster.
std::vector<SpectralCluster> cluster_eigenvalues(const std::vector<double>& ascending_values,
                                                 double cluster_tol);

// Functional calculus sum f(t_k) P_k over the spectral clusters of `system`,
// with f given per distinct-eigenvalue index. Throws MissingClusterValue if
// the table does not cover every cluster.
ComplexMatrix apply_scalar_function(const EigenSystem& system,
                                    const std::map<std::size_t, Complex>& table,
                                    const Settings& settings = default_settings());

} // namespace projdist
