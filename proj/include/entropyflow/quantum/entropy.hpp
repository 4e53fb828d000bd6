// von Neumann entropy and quantum relative entropy, in nats.

#pragma once

#include <algorithm>
#include <cmath>

#include "entropyflow/linalg/matrix_function.hpp"
#include "entropyflow/quantum/density_matrix.hpp"

namespace entropyflow {

/// -tr(rho ln rho) = -sum lambda ln lambda over the spectrum, with
/// 0 ln 0 := 0. Eigenvalues inside the PSD slack [-1e-10, 0) count as 0.
inline double von_neumann_entropy(const DensityMatrix& rho) {
    double s = 0.0;
    for (double lambda : rho.eigenvalues())
        if (lambda > kLogClampFloor) s -= lambda * std::log(lambda);
    return std::max(s, 0.0);
}

/// tr(rho ln rho) - tr(rho ln sigma), non-negative by the Klein inequality.
/// Requires the support of rho to lie inside the support of sigma.
inline double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
    require(rho.dim() == sigma.dim(), ErrorKind::DimensionMismatch,
            "relative entropy requires equal dimensions");

    const HermitianEigenSystem sys = hermitian_eigendecompose(sigma.matrix());
    const std::size_t n = rho.dim();
    const ComplexMatrix& v = sys.eigenvectors;

    // <v_k| rho |v_k> for every sigma eigenvector.
    std::vector<double> overlap(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        Complex acc{0.0, 0.0};
        for (std::size_t r = 0; r < n; ++r) {
            Complex row{0.0, 0.0};
            for (std::size_t c = 0; c < n; ++c) row += rho.matrix()(r, c) * v(c, k);
            acc += std::conj(v(r, k)) * row;
        }
        overlap[k] = acc.real();
    }

    double outside = 0.0;
    double tr_rho_ln_sigma = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (sys.eigenvalues[k] <= kLogClampFloor) {
            outside += std::max(overlap[k], 0.0);
        }
        tr_rho_ln_sigma += overlap[k] * std::log(std::max(sys.eigenvalues[k], kLogClampFloor));
    }
    require(outside < 1e-8, ErrorKind::SupportMismatch,
            "rho carries weight >= 1e-8 outside the support of sigma");

    double tr_rho_ln_rho = 0.0;
    for (double lambda : rho.eigenvalues())
        if (lambda > kLogClampFloor) tr_rho_ln_rho += lambda * std::log(lambda);

    return tr_rho_ln_rho - tr_rho_ln_sigma;
}

} // namespace entropyflow
