#include "projdist/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "projdist/distance.hpp"
#include "projdist/eigen.hpp"
#include "projdist/errors.hpp"

namespace projdist {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Complex standard normals from the raw mt19937_64 stream. Doubles are built
// from the top 53 bits directly, so the stream is identical on every platform.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

    Complex next() {
        double u1 = uniform();
        while (u1 == 0.0) u1 = uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        return Complex{radius * std::cos(2.0 * kPi * u2), radius * std::sin(2.0 * kPi * u2)};
    }

private:
    double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
    std::mt19937_64 rng_;
};

void orthonormalize_columns(ComplexMatrix& w) {
    const std::size_t n = w.rows();
    const std::size_t cols = w.cols();
    // Two passes of modified Gram-Schmidt.
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < cols; ++j) {
            for (std::size_t k = 0; k < j; ++k) {
                Complex proj{0.0, 0.0};
                for (std::size_t i = 0; i < n; ++i) proj += std::conj(w(i, k)) * w(i, j);
                for (std::size_t i = 0; i < n; ++i) w(i, j) -= proj * w(i, k);
            }
            double norm = 0.0;
            for (std::size_t i = 0; i < n; ++i) norm += std::norm(w(i, j));
            norm = std::sqrt(norm);
            if (norm < 1e-8)
                throw InternalError("Gaussian sample produced a numerically dependent column");
            for (std::size_t i = 0; i < n; ++i) w(i, j) = w(i, j) * (1.0 / norm);
        }
    }
}

} // namespace

ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed) {
    GaussianStream stream(seed);
    ComplexMatrix w(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w(i, j) = stream.next();
    orthonormalize_columns(w);
    return w;
}

double lambda_eigenvalue(double t, bool chi, double omega_angle) {
    if (!(t > 0.0 && t < 1.0))
        throw OutOfRange("spectral point " + std::to_string(t) + " outside (0, 1)");
    if (!chi) return 1.0;
    const double value = 0.5 - std::sqrt(t * (1.0 - t)) * std::cos(omega_angle);
    return std::sqrt(std::max(value, 0.0));
}

double lambda_eigenvalue_numeric(double t, bool chi, double omega_angle,
                                 const Settings& settings) {
    if (!(t > 0.0 && t < 1.0))
        throw OutOfRange("spectral point " + std::to_string(t) + " outside (0, 1)");
    const double c = chi ? 1.0 : 0.0;
    const double s = std::sqrt(t * (1.0 - t));
    const Complex omega{std::cos(omega_angle), std::sin(omega_angle)};
    const ComplexMatrix block = ComplexMatrix::from_rows(
        {{Complex{t - 0.5 * c, 0.0}, Complex{s, 0.0} - 0.5 * c * omega},
         {Complex{s, 0.0} - 0.5 * c * std::conj(omega), Complex{1.0 - t - 0.5 * c, 0.0}}});
    return operator_norm(block, settings);
}

OracleResult oracle_distance(const CanonicalForm& cf, std::size_t omega_grid,
                             const Settings& settings) {
    if (cf.case_one())
        throw CaseOneError("exhaustive search is defined for Case 2 decompositions");
    if (omega_grid == 0) throw OutOfRange("omega grid must have at least one point");
    const std::size_t k = cf.h_spectrum.size();
    if (k > settings.chi_enumeration_cap)
        throw TooManyClusters(std::to_string(k) + " spectral points exceed the enumeration cap of " +
                              std::to_string(settings.chi_enumeration_cap));

    const std::vector<double> points = cf.distinct_h_values();

    // Uniform angle grid; j = 0 contributes the analytic optimum omega = 1.
    std::vector<double> angles(omega_grid);
    for (std::size_t j = 0; j < omega_grid; ++j)
        angles[j] = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(omega_grid);

    OracleResult best;
    best.min_value = std::numeric_limits<double>::infinity();

    // Ascending pattern index = lexicographically ascending chi (cluster 0 at
    // the most significant bit), so strict improvement keeps the smallest tie.
    const std::size_t pattern_count = std::size_t{1} << k;
    for (std::size_t pattern = 0; pattern < pattern_count; ++pattern) {
        std::vector<bool> chi(k);
        std::vector<double> chosen(k, 0.0);
        double value = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            chi[j] = ((pattern >> (k - 1 - j)) & 1u) != 0;
            double lambda_j = 1.0;
            double angle_j = 0.0;
            if (chi[j]) {
                lambda_j = std::numeric_limits<double>::infinity();
                for (double angle : angles) {
                    const double lambda = lambda_eigenvalue(points[j], true, angle);
                    if (lambda < lambda_j) {
                        lambda_j = lambda;
                        angle_j = angle;
                    }
                }
            }
            chosen[j] = angle_j;
            value = std::max(value, lambda_j);
        }
        if (value < best.min_value) {
            best.min_value = value;
            best.argmin = FamilyElement{std::move(chi), std::move(chosen)};
        }
    }
    if (k == 0) best.min_value = 0.0;

    // The lambda route must agree with the norm of the assembled difference.
    const ComplexMatrix e = reconstruct(cf).first;
    const ComplexMatrix q = build_family_element(cf, best.argmin, settings);
    const double direct = operator_norm(e - q, settings);
    if (!(std::abs(direct - best.min_value) <= settings.residual_tol))
        throw InternalError("oracle disagreement: lambda route " + std::to_string(best.min_value) +
                            " vs assembled " + std::to_string(direct));
    return best;
}

GeneralFamilyPoint general_family_3x3(Complex x, Complex y, const Settings& settings) {
    const double norm2 = std::norm(x) + std::norm(y);
    if (!(std::abs(norm2 - 1.0) <= 1e-12))
        throw NotNormalized("|x|^2 + |y|^2 = " + std::to_string(norm2) + ", expected 1");

    const Complex half{0.5, 0.0};
    GeneralFamilyPoint point;
    point.q = ComplexMatrix::from_rows({{Complex{std::norm(x), 0.0}, x * std::conj(y), x},
                                        {std::conj(x) * y, Complex{std::norm(y), 0.0}, y},
                                        {std::conj(x), std::conj(y), Complex{1.0, 0.0}}});
    point.q = point.q * half;

    const ComplexMatrix e = ComplexMatrix::diagonal({1.0, 0.0, 0.0});
    const ComplexMatrix u = ComplexMatrix::diagonal({1.0, 1.0, -1.0});
    const FeasibilityResiduals residuals = feasibility_residuals(point.q, u, settings);
    if (!(residuals.max() <= settings.residual_tol))
        throw InternalError("general 3x3 family point failed feasibility: residual " +
                            std::to_string(residuals.max()));

    point.distance = operator_norm(e - point.q, settings);
    const double expected = std::sqrt(0.5 * (1.0 + std::norm(y)));
    if (!(std::abs(point.distance - expected) <= settings.residual_tol))
        throw InternalError("general 3x3 family distance " + std::to_string(point.distance) +
                            " does not match closed form " + std::to_string(expected));
    return point;
}

GeneratedInstance random_instance(const InstanceSpec& spec, const Settings& settings) {
    std::size_t m = 0;
    for (const auto& [value, mult] : spec.spectrum) {
        if (!(value > 0.0 && value < 1.0))
            throw BadSpec("spectrum value " + std::to_string(value) + " outside (0, 1)");
        if (mult == 0) throw BadSpec("spectrum multiplicity must be positive");
        m += mult;
    }
    auto sorted = spec.spectrum;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    const double min_gap = settings.degenerate_spectrum_factor * settings.cluster_tol;
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (!(sorted[i].first - sorted[i - 1].first > min_gap))
            throw BadSpec("spectrum values closer than " + std::to_string(min_gap));

    const std::size_t n = spec.dim_m00 + spec.dim_m01 + spec.dim_m10 + spec.dim_m11 + 2 * m;
    if (n == 0) throw BadSpec("instance has no dimensions at all");

    const ComplexMatrix w = random_unitary(n, spec.seed);

    CanonicalForm cf;
    std::size_t at = 0;
    const auto take = [&](std::size_t count) {
        ComplexMatrix part = w.columns(at, count);
        at += count;
        return part;
    };
    cf.basis_m00 = take(spec.dim_m00);
    cf.basis_m01 = take(spec.dim_m01);
    cf.basis_m10 = take(spec.dim_m10);
    cf.basis_m11 = take(spec.dim_m11);
    cf.basis_m_plus = take(m);
    cf.basis_m_minus = take(m);

    std::size_t offset = 0;
    for (const auto& [value, mult] : sorted) {
        SpectralDatum datum;
        datum.value = value;
        datum.multiplicity = mult;
        datum.vectors = ComplexMatrix(m, mult);
        for (std::size_t j = 0; j < mult; ++j) datum.vectors(offset + j, j) = Complex{1.0, 0.0};
        offset += mult;
        cf.h_spectrum.push_back(std::move(datum));
    }

    GeneratedInstance instance;
    auto pair = reconstruct(cf);
    instance.e = std::move(pair.first);
    instance.u = std::move(pair.second);
    instance.ground_truth = std::move(cf);
    return instance;
}

} // namespace projdist
