#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace projdist {

using Complex = std::complex<double>;

// Dense complex matrix, row-major. Dimensions of zero are legal so that
// orthonormal bases of trivial subspaces (n x 0) flow through the same code
// paths as everything else.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(const std::vector<double>& entries);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    ComplexMatrix adjoint() const;

    ComplexMatrix operator+(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix operator*(Complex scalar) const;
    ComplexMatrix operator-() const;

    // Column range [first, first + count) as a rows() x count matrix.
    ComplexMatrix columns(std::size_t first, std::size_t count) const;
    ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
    void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b);

    static ComplexMatrix hstack(const std::vector<ComplexMatrix>& parts);
    static ComplexMatrix vstack(const std::vector<ComplexMatrix>& parts);

    double frobenius_norm() const;
    double max_abs() const;
    bool is_finite() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

inline ComplexMatrix operator*(Complex scalar, const ComplexMatrix& m) { return m * scalar; }
inline ComplexMatrix operator*(double scalar, const ComplexMatrix& m) { return m * Complex{scalar, 0.0}; }

} // namespace projdist
