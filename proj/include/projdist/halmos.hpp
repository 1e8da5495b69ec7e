#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "projdist/complex_matrix.hpp"
#include "projdist/eigen.hpp"
#include "projdist/settings.hpp"

namespace projdist {

// One distinct eigenvalue of the generic-part operator H, with the columns of
// the M coordinate frame that carry it. The decomposition orders the M basis
// by ascending eigenvalue, so `vectors` is always a slab of identity columns.
struct SpectralDatum {
    double value = 0.0;
    std::size_t multiplicity = 0;
    ComplexMatrix vectors; // dim(M) x multiplicity
};

// The six-summand decomposition of the ambient space under an orthogonal
// projection e and a hermitian involution u:
//
//   m00 = ran(e) ∩ H+    m01 = ker(e) ∩ H+
//   m10 = ker(e) ∩ H-    m11 = ran(e) ∩ H-
//   m_plus  = generic part M inside H+, ordered by ascending eigenvalue of H
//   m_minus = the paired copy inside H-
//
// In the concatenated basis [m00 | m01 | m10 | m11 | m_plus | m_minus], u is
// diagonal with blocks (+1, +1, -1, -1, +1, -1) and e has the five-block
// form (I, 0, 0, I, [[H, S], [S, I-H]]) with S = sqrt(H(I-H)).
struct CanonicalForm {
    ComplexMatrix basis_m00;
    ComplexMatrix basis_m01;
    ComplexMatrix basis_m10;
    ComplexMatrix basis_m11;
    ComplexMatrix basis_m_plus;
    ComplexMatrix basis_m_minus;
    std::vector<SpectralDatum> h_spectrum;

    std::size_t ambient_dimension() const;
    std::size_t dim_m00() const { return basis_m00.cols(); }
    std::size_t dim_m01() const { return basis_m01.cols(); }
    std::size_t dim_m10() const { return basis_m10.cols(); }
    std::size_t dim_m11() const { return basis_m11.cols(); }
    std::size_t dim_m() const { return basis_m_plus.cols(); }

    // Range of e meets an eigenspace of u non-trivially.
    bool case_one() const { return dim_m00() > 0 || dim_m11() > 0; }

    // [m00 | m01 | m10 | m11 | m_plus | m_minus]; unitary when the invariants hold.
    ComplexMatrix concatenated_basis() const;

    // Eigenvalues of H expanded by multiplicity, ascending.
    std::vector<double> h_eigenvalues() const;

    // Distinct spectral points (cluster representatives), ascending.
    std::vector<double> distinct_h_values() const;
};

// Throws NotProjection / NotInvolution / DimensionMismatch when the named
// precondition fails at settings.validation_tol.
void require_projection(const ComplexMatrix& e, const Settings& settings = default_settings());
void require_involution(const ComplexMatrix& u, const Settings& settings = default_settings());
void require_compatible_pair(const ComplexMatrix& e, const ComplexMatrix& u,
                             const Settings& settings = default_settings());

// Orthonormal bases of ker(u - I) and ker(u + I); together they span the
// whole space.
std::pair<ComplexMatrix, ComplexMatrix> eigenspaces_of_involution(
    const ComplexMatrix& u, const Settings& settings = default_settings());

CanonicalForm canonical_decomposition(const ComplexMatrix& e, const ComplexMatrix& u,
                                      const Settings& settings = default_settings());

// Rebuilds (e, u) in the original coordinates from the block forms.
std::pair<ComplexMatrix, ComplexMatrix> reconstruct(const CanonicalForm& cf);

} // namespace projdist
