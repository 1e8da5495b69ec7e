#include "projdist/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "projdist/errors.hpp"

namespace projdist {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Complex{1.0, 0.0};
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& entries) {
    ComplexMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = Complex{entries[i], 0.0};
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    ComplexMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionMismatch("from_rows: ragged row list");
        std::size_t j = 0;
        for (const auto& v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix add: shape mismatch");
    ComplexMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] + rhs.data_[k];
    return m;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sub: shape mismatch");
    ComplexMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] - rhs.data_[k];
    return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatch("matrix mul: inner dimension mismatch");
    ComplexMatrix m(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex a = (*this)(i, k);
            if (a == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) m(i, j) += a * rhs(k, j);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::operator*(Complex scalar) const {
    ComplexMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] * scalar;
    return m;
}

ComplexMatrix ComplexMatrix::operator-() const { return (*this) * Complex{-1.0, 0.0}; }

ComplexMatrix ComplexMatrix::columns(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw DimensionMismatch("columns: range out of bounds");
    ComplexMatrix m(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
    return m;
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
    if (r0 + rows > rows_ || c0 + cols > cols_) throw DimensionMismatch("block: range out of bounds");
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

void ComplexMatrix::set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw DimensionMismatch("set_block: range out of bounds");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

ComplexMatrix ComplexMatrix::hstack(const std::vector<ComplexMatrix>& parts) {
    std::size_t rows = 0, cols = 0;
    for (const auto& p : parts) {
        if (p.cols() == 0) continue;
        if (rows == 0) rows = p.rows();
        if (p.rows() != rows) throw DimensionMismatch("hstack: row count mismatch");
        cols += p.cols();
    }
    if (rows == 0)
        for (const auto& p : parts) rows = std::max(rows, p.rows());
    ComplexMatrix m(rows, cols);
    std::size_t at = 0;
    for (const auto& p : parts) {
        if (p.cols() == 0) continue;
        m.set_block(0, at, p);
        at += p.cols();
    }
    return m;
}

ComplexMatrix ComplexMatrix::vstack(const std::vector<ComplexMatrix>& parts) {
    std::size_t rows = 0, cols = 0;
    for (const auto& p : parts) {
        if (p.rows() == 0) continue;
        if (cols == 0) cols = p.cols();
        if (p.cols() != cols) throw DimensionMismatch("vstack: column count mismatch");
        rows += p.rows();
    }
    if (cols == 0)
        for (const auto& p : parts) cols = std::max(cols, p.cols());
    ComplexMatrix m(rows, cols);
    std::size_t at = 0;
    for (const auto& p : parts) {
        if (p.rows() == 0) continue;
        m.set_block(at, 0, p);
        at += p.rows();
    }
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double s = 0.0;
    for (const auto& v : data_) s = std::max(s, std::abs(v));
    return s;
}

bool ComplexMatrix::is_finite() const {
    for (const auto& v : data_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

} // namespace projdist
