// The quantum coarse-graining operations: maximal mixing, the four
// partial-trace varieties, and full/partial decoherence. Every map here is
// entropy non-decreasing; the tuneable ones interpolate monotonically between
// the identity at s = 0 and their all-or-nothing counterpart at s = 1.

#pragma once

#include "entropyflow/quantum/entropy.hpp"

namespace entropyflow {

namespace detail {

inline void check_tuning(double s) {
    require(std::isfinite(s) && s >= 0.0 && s <= 1.0, ErrorKind::ParameterOutOfRange,
            "tuning parameter must lie in [0, 1]");
}

} // namespace detail

/// rho -> (1-s) rho + s I/N.
inline DensityMatrix maximal_mix(const DensityMatrix& rho, double s) {
    detail::check_tuning(s);
    const std::size_t n = rho.dim();
    const ComplexMatrix mixed = (1.0 - s) * rho.matrix() +
                                (s / static_cast<double>(n)) * ComplexMatrix::identity(n);
    return DensityMatrix(mixed, rho.bipartition());
}

/// rho_AB -> rho_A (x) rho_B, the simultaneous coarse graining onto both
/// factors. Idempotent; S = S_A + S_B afterwards.
inline DensityMatrix reduced_product(const DensityMatrix& rho) {
    const Bipartition& bip = rho.require_bipartition();
    const ComplexMatrix a = partial_trace(rho.matrix(), bip.dim_a, bip.dim_b, Subsystem::A);
    const ComplexMatrix b = partial_trace(rho.matrix(), bip.dim_a, bip.dim_b, Subsystem::B);
    return DensityMatrix(tensor_product(a, b), bip);
}

/// S_A + S_B - S_AB.
inline double mutual_information(const DensityMatrix& rho) {
    const double s_a = von_neumann_entropy(rho.marginal(Subsystem::A));
    const double s_b = von_neumann_entropy(rho.marginal(Subsystem::B));
    return s_a + s_b - von_neumann_entropy(rho);
}

/// rho_AB -> (1-s) rho_AB + s rho_A (x) rho_B.
inline DensityMatrix tuneable_partial_trace(const DensityMatrix& rho, double s) {
    detail::check_tuning(s);
    const DensityMatrix product = reduced_product(rho);
    return DensityMatrix((1.0 - s) * rho.matrix() + s * product.matrix(), rho.bipartition());
}

/// rho_AB -> rho_A (x) I_B/N_B: trace out B, then maximally mix it.
inline DensityMatrix asymmetric_mix(const DensityMatrix& rho) {
    const Bipartition& bip = rho.require_bipartition();
    const ComplexMatrix a = partial_trace(rho.matrix(), bip.dim_a, bip.dim_b, Subsystem::A);
    const ComplexMatrix mixed_b =
        (1.0 / static_cast<double>(bip.dim_b)) * ComplexMatrix::identity(bip.dim_b);
    return DensityMatrix(tensor_product(a, mixed_b), bip);
}

/// rho_AB -> (1-s) rho_AB + s rho_A (x) I_B/N_B.
inline DensityMatrix tuneable_asymmetric_mix(const DensityMatrix& rho, double s) {
    detail::check_tuning(s);
    const DensityMatrix target = asymmetric_mix(rho);
    return DensityMatrix((1.0 - s) * rho.matrix() + s * target.matrix(), rho.bipartition());
}

/// rho -> sum_a P_a tr(P_a rho): kill all off-diagonal elements relative to
/// the basis. Idempotent; S(rho_D) - S(rho) = relative_entropy(rho, rho_D).
inline DensityMatrix decohere_full(const DensityMatrix& rho, const ProjectorBasis& basis) {
    require(basis.dim() == rho.dim(), ErrorKind::InvalidBasis,
            "basis dimension does not match the state");
    return DensityMatrix(basis.project_diagonal(rho.matrix()), rho.bipartition());
}

/// rho -> (1-s) rho + s rho_D: suppress off-diagonal elements by the factor
/// (1-s), leaving the diagonal untouched.
inline DensityMatrix decohere_partial(const DensityMatrix& rho, const ProjectorBasis& basis,
                                      double s) {
    detail::check_tuning(s);
    const DensityMatrix full = decohere_full(rho, basis);
    return DensityMatrix((1.0 - s) * rho.matrix() + s * full.matrix(), rho.bipartition());
}

} // namespace entropyflow
