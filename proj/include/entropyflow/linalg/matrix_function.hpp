// Matrix functions: spectral f(A) for Hermitian A, and a scaling-and-squaring
// exponential for general (possibly non-normal) matrices such as channel
// generators.

#pragma once

#include <cmath>
#include <functional>

#include "entropyflow/linalg/hermitian_eigen.hpp"

namespace entropyflow {

/// Floor used when taking logarithms of density-matrix spectra: eigenvalues
/// below this are either dropped (0 ln 0 := 0) or clamped up to it.
inline constexpr double kLogClampFloor = 1e-15;

/// V f(Lambda) V^dagger for Hermitian input. f must be finite on the spectrum.
inline ComplexMatrix matrix_function(const ComplexMatrix& a,
                                     const std::function<double(double)>& f) {
    const HermitianEigenSystem sys = hermitian_eigendecompose(a);
    const std::size_t n = a.rows();
    std::vector<double> fvals(n);
    for (std::size_t k = 0; k < n; ++k) {
        fvals[k] = f(sys.eigenvalues[k]);
        require(std::isfinite(fvals[k]), ErrorKind::DomainError,
                "scalar function is not finite on eigenvalue " +
                    std::to_string(sys.eigenvalues[k]));
    }
    ComplexMatrix out(n, n);
    const ComplexMatrix& v = sys.eigenvectors;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k)
                acc += v(r, k) * fvals[k] * std::conj(v(c, k));
            out(r, c) = acc;
        }
    return hermitian_part(out);
}

/// ln(A) with eigenvalues clamped up to kLogClampFloor.
inline ComplexMatrix matrix_log_clamped(const ComplexMatrix& a) {
    return matrix_function(a, [](double x) { return std::log(std::max(x, kLogClampFloor)); });
}

/// exp(A) for a general square matrix: scale by 2^k until ||A/2^k||_1 <= 0.5,
/// run an 18-term Taylor series, square k times. Robust for the non-normal
/// generators encountered here (dimension <= 256).
inline ComplexMatrix expm(const ComplexMatrix& a) {
    require(a.is_square(), ErrorKind::DimensionMismatch, "expm requires a square matrix");
    const std::size_t n = a.rows();

    int k = 0;
    double norm = one_norm(a);
    while (norm > 0.5 && k < 64) {
        norm *= 0.5;
        ++k;
    }
    const double scale = std::ldexp(1.0, -k);
    ComplexMatrix b = scale * a;

    ComplexMatrix result = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (int j = 1; j <= 18; ++j) {
        term = (1.0 / static_cast<double>(j)) * (term * b);
        result = result + term;
    }
    for (int j = 0; j < k; ++j) result = result * result;
    return result;
}

} // namespace entropyflow
