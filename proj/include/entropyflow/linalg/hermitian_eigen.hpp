// Hermitian eigendecomposition via cyclic Jacobi rotations.
//
// Accurate and dependency-free at the matrix sizes this toolkit targets
// (N <= 256). Convergence: off-diagonal Frobenius norm below 1e-14 * ||A||_F,
// at most 100 sweeps.

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "entropyflow/linalg/complex_matrix.hpp"

namespace entropyflow {

inline constexpr double kHermitianTolerance = 1e-12;

/// Eigenvalues ascending; eigenvector k is column k of `eigenvectors`.
struct HermitianEigenSystem {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

namespace detail {

inline double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

} // namespace detail

inline HermitianEigenSystem hermitian_eigendecompose(const ComplexMatrix& input) {
    require(input.is_square(), ErrorKind::DimensionMismatch,
            "eigendecomposition requires a square matrix");
    require(input.hermitian_defect() <= kHermitianTolerance, ErrorKind::NotHermitian,
            "matrix is not Hermitian within tolerance 1e-12");

    const std::size_t n = input.rows();
    ComplexMatrix a = hermitian_part(input);
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double norm_a = frobenius_norm(a);
    const double target = 1e-14 * norm_a;
    const int max_sweeps = 100;

    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        if (detail::off_diagonal_norm(a) <= target) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex g = a(p, q);
                const double abs_g = std::abs(g);
                if (abs_g == 0.0) continue;

                // Unitary plane rotation J zeroing a(p,q):
                //   J(p,p)=c, J(p,q)=s*phase, J(q,p)=-s*conj(phase), J(q,q)=c
                // with phase = g/|g| and the classic stable tangent formula.
                const Complex phase = g / abs_g;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * abs_g);
                double t;
                if (theta == 0.0) {
                    t = 1.0;
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // A <- J^dagger A J, columns first then rows.
                for (std::size_t r = 0; r < n; ++r) {
                    const Complex arp = a(r, p);
                    const Complex arq = a(r, q);
                    a(r, p) = c * arp - s * std::conj(phase) * arq;
                    a(r, q) = s * phase * arp + c * arq;
                }
                for (std::size_t col = 0; col < n; ++col) {
                    const Complex apc = a(p, col);
                    const Complex aqc = a(q, col);
                    a(p, col) = c * apc - s * phase * aqc;
                    a(q, col) = s * std::conj(phase) * apc + c * aqc;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;

                // V <- V J
                for (std::size_t r = 0; r < n; ++r) {
                    const Complex vrp = v(r, p);
                    const Complex vrq = v(r, q);
                    v(r, p) = c * vrp - s * std::conj(phase) * vrq;
                    v(r, q) = s * phase * vrp + c * vrq;
                }
            }
        }
    }
    require(sweep < max_sweeps || detail::off_diagonal_norm(a) <= target,
            ErrorKind::NumericalFailure, "Jacobi eigensolver did not converge in 100 sweeps");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    HermitianEigenSystem sys;
    sys.eigenvalues.resize(n);
    sys.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        sys.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) sys.eigenvectors(r, k) = v(r, order[k]);
    }
    return sys;
}

/// Eigenvalues only, ascending.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
    return hermitian_eigendecompose(a).eigenvalues;
}

} // namespace entropyflow
