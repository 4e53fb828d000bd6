// Diffusion on Hilbert space.
//
// Super-scattering route: the semigroup exp(t(S - I)) generated by any
// entropy non-decreasing channel S drives entropy monotonically upward and
// relaxes states onto the channel's fixed-point set. Partial-trace route: the
// idempotent (nonlinear) product-of-marginals map gives the closed form
// e^{-t} rho + (1 - e^{-t}) rho_A (x) rho_B, i.e. the tuneable partial trace
// at s = 1 - e^{-t}.

#pragma once

#include "entropyflow/channels/super_scattering.hpp"
#include "entropyflow/linalg/matrix_function.hpp"

namespace entropyflow {

/// exp(t (superMatrix - I)) as an explicit superoperator matrix.
inline ComplexMatrix hilbert_propagator(const SuperScattering& channel, double t) {
    require(std::isfinite(t) && t >= 0.0, ErrorKind::NegativeTime,
            "diffusion time must be non-negative");
    return expm(t * generator(channel));
}

/// rho_t = e^{-t} e^{t S} rho for an entropy non-decreasing channel S.
inline DensityMatrix hilbert_diffusion(const SuperScattering& channel, const DensityMatrix& rho,
                                       double t) {
    require(channel.is_monotone(), ErrorKind::NonMonotoneChannel,
            "Hilbert-space diffusion requires an entropy non-decreasing channel");
    require(std::isfinite(t) && t >= 0.0, ErrorKind::NegativeTime,
            "diffusion time must be non-negative");
    require(channel.dim() == rho.dim(), ErrorKind::DimensionMismatch,
            "state dimension does not match the channel");
    const ComplexMatrix propagated =
        unvectorize(hilbert_propagator(channel, t) * vectorize(rho.matrix()), rho.dim());
    return DensityMatrix(hermitian_part(propagated), rho.bipartition());
}

/// rho_t = e^{-t} rho_AB + (1 - e^{-t}) rho_A (x) rho_B.
inline DensityMatrix partial_trace_diffusion(const DensityMatrix& rho, double t) {
    require(std::isfinite(t) && t >= 0.0, ErrorKind::NegativeTime,
            "diffusion time must be non-negative");
    return tuneable_partial_trace(rho, 1.0 - std::exp(-t));
}

} // namespace entropyflow
