// Dense complex matrix in row-major storage. Deliberately minimal: just what
// the entropy toolkit needs at desk scale (N <= 256), no BLAS dependency.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <utility>
#include <vector>

#include "entropyflow/core/error.hpp"

namespace entropyflow {

using Complex = std::complex<double>;

class ComplexMatrix {
public:
    ComplexMatrix() = default;

    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {
        require(rows > 0 && cols > 0, ErrorKind::DimensionMismatch,
                "matrix dimensions must be positive");
    }

    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        require(rows > 0 && cols > 0, ErrorKind::DimensionMismatch,
                "matrix dimensions must be positive");
        require(entries_.size() == rows * cols, ErrorKind::DimensionMismatch,
                "entry count does not match rows*cols");
        check_finite();
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows.begin()->size();
        std::vector<Complex> data;
        data.reserve(r * c);
        for (const auto& row : rows) {
            require(row.size() == c, ErrorKind::DimensionMismatch, "ragged row list");
            data.insert(data.end(), row.begin(), row.end());
        }
        return ComplexMatrix(r, c, std::move(data));
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<Complex>& entries() const noexcept { return entries_; }

    ComplexMatrix adjoint() const {
        ComplexMatrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
        return out;
    }

    ComplexMatrix transpose() const {
        ComplexMatrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        return out;
    }

    ComplexMatrix conjugate() const {
        ComplexMatrix out(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = std::conj(entries_[i]);
        return out;
    }

    /// max_ij |A_ij - conj(A_ji)|, the Hermitian symmetry defect.
    double hermitian_defect() const {
        if (!is_square()) return std::numeric_limits<double>::infinity();
        double worst = 0.0;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = r; c < cols_; ++c)
                worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        return worst;
    }

private:
    void check_finite() const {
        for (const Complex& z : entries_)
            require(std::isfinite(z.real()) && std::isfinite(z.imag()), ErrorKind::NonFinite,
                    "matrix entries must be finite");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::DimensionMismatch,
            "matrix addition shape mismatch");
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
    return out;
}

inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::DimensionMismatch,
            "matrix subtraction shape mismatch");
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
    return out;
}

inline ComplexMatrix operator*(const Complex& scale, const ComplexMatrix& a) {
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = scale * a(r, c);
    return out;
}

inline ComplexMatrix operator*(double scale, const ComplexMatrix& a) {
    return Complex{scale, 0.0} * a;
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.cols() == b.rows(), ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex{0.0, 0.0}) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
        }
    }
    return out;
}

inline Complex trace(const ComplexMatrix& a) {
    require(a.is_square(), ErrorKind::DimensionMismatch, "trace requires a square matrix");
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

inline double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const Complex& z : a.entries()) s += std::norm(z);
    return std::sqrt(s);
}

/// Maximum absolute column sum (the induced 1-norm).
inline double one_norm(const ComplexMatrix& a) {
    double worst = 0.0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        double s = 0.0;
        for (std::size_t r = 0; r < a.rows(); ++r) s += std::abs(a(r, c));
        worst = std::max(worst, s);
    }
    return worst;
}

inline double max_abs(const ComplexMatrix& a) {
    double worst = 0.0;
    for (const Complex& z : a.entries()) worst = std::max(worst, std::abs(z));
    return worst;
}

/// (A + A^dagger)/2; collapses rounding asymmetry of nominally Hermitian results.
inline ComplexMatrix hermitian_part(const ComplexMatrix& a) {
    require(a.is_square(), ErrorKind::DimensionMismatch, "hermitian_part requires a square matrix");
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = 0.5 * (a(r, c) + std::conj(a(c, r)));
    return out;
}

} // namespace entropyflow
