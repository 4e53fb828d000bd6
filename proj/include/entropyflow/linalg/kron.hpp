// Tensor (Kronecker) products and partial traces for bipartite systems.
// Index convention is A-major throughout: composite index (a,b) -> a*N_B + b.

#pragma once

#include "entropyflow/linalg/complex_matrix.hpp"

namespace entropyflow {

enum class Subsystem { A, B };

/// Kronecker product with the first factor's index varying slowest:
/// (a tensor b)((i*rb+k),(j*cb+l)) = a(i,j) * b(k,l).
inline ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

/// Trace out one tensor factor of an (N_A*N_B) x (N_A*N_B) matrix.
/// keep == A returns tr_B, keep == B returns tr_A; the total trace is preserved.
inline ComplexMatrix partial_trace(const ComplexMatrix& ab, std::size_t dim_a,
                                   std::size_t dim_b, Subsystem keep) {
    require(dim_a > 0 && dim_b > 0, ErrorKind::DimensionMismatch,
            "bipartite dimensions must be positive");
    require(ab.is_square() && ab.rows() == dim_a * dim_b, ErrorKind::DimensionMismatch,
            "matrix size does not match bipartite dimensions");
    if (keep == Subsystem::A) {
        ComplexMatrix out(dim_a, dim_a);
        for (std::size_t i = 0; i < dim_a; ++i)
            for (std::size_t j = 0; j < dim_a; ++j) {
                Complex acc{0.0, 0.0};
                for (std::size_t b = 0; b < dim_b; ++b) acc += ab(i * dim_b + b, j * dim_b + b);
                out(i, j) = acc;
            }
        return out;
    }
    ComplexMatrix out(dim_b, dim_b);
    for (std::size_t k = 0; k < dim_b; ++k)
        for (std::size_t l = 0; l < dim_b; ++l) {
            Complex acc{0.0, 0.0};
            for (std::size_t a = 0; a < dim_a; ++a) acc += ab(a * dim_b + k, a * dim_b + l);
            out(k, l) = acc;
        }
    return out;
}

} // namespace entropyflow
