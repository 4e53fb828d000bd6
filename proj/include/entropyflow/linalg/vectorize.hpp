// Row-major vectorization of matrices and of linear maps on matrices.
//
// The vec convention is fixed once for the whole project: vec stacks rows,
// vec(X)[i*N + j] = X(i,j). Superoperator matrices and golden files depend
// on it.

#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "entropyflow/linalg/complex_matrix.hpp"

namespace entropyflow {

using MatrixAction = std::function<ComplexMatrix(const ComplexMatrix&)>;

/// vec: N x M matrix -> column vector of length N*M (stored as an (N*M) x 1 matrix).
inline ComplexMatrix vectorize(const ComplexMatrix& x) {
    ComplexMatrix out(x.rows() * x.cols(), 1);
    for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t c = 0; c < x.cols(); ++c) out(r * x.cols() + c, 0) = x(r, c);
    return out;
}

/// Inverse of vectorize for square targets.
inline ComplexMatrix unvectorize(const ComplexMatrix& v, std::size_t n) {
    require(v.cols() == 1 && v.rows() == n * n, ErrorKind::DimensionMismatch,
            "unvectorize expects an n^2 column vector");
    ComplexMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = v(r * n + c, 0);
    return out;
}

/// Matrix unit E_k for the row-major basis ordering, k = i*N + j.
inline ComplexMatrix matrix_unit(std::size_t n, std::size_t k) {
    ComplexMatrix e(n, n);
    e(k / n, k % n) = 1.0;
    return e;
}

/// Represent a linear map on N x N matrices as an N^2 x N^2 matrix: column k
/// is vec(action(E_k)). Linearity is spot-checked on random pairs first and
/// violations are rejected, since a nonlinear action has no such matrix.
inline ComplexMatrix vectorize_superoperator(std::size_t n, const MatrixAction& action,
                                             std::uint64_t spot_check_seed = 0x5eed) {
    require(n > 0, ErrorKind::DimensionMismatch, "dimension must be positive");

    std::mt19937_64 eng(spot_check_seed);
    auto uniform = [&eng]() {
        return static_cast<double>(eng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
    };
    for (int trial = 0; trial < 3; ++trial) {
        ComplexMatrix x(n, n), y(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                x(r, c) = Complex{uniform(), uniform()};
                y(r, c) = Complex{uniform(), uniform()};
            }
        const Complex alpha{uniform(), uniform()};
        const Complex beta{uniform(), uniform()};
        const ComplexMatrix lhs = action(alpha * x + beta * y);
        const ComplexMatrix rhs = alpha * action(x) + beta * action(y);
        require(max_abs(lhs - rhs) <= 1e-10, ErrorKind::NonlinearAction,
                "action fails the linearity spot-check");
    }

    ComplexMatrix super(n * n, n * n);
    for (std::size_t k = 0; k < n * n; ++k) {
        const ComplexMatrix image = action(matrix_unit(n, k));
        require(image.rows() == n && image.cols() == n, ErrorKind::DimensionMismatch,
                "action must preserve matrix shape");
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) super(r * n + c, k) = image(r, c);
    }
    return super;
}

} // namespace entropyflow
