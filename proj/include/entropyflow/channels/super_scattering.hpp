// Super-scattering channels: trace-preserving linear maps on density
// matrices, stored as N^2 x N^2 matrices acting on row-major vectorized
// states.
//
// The built-in channel table (maximal mixing, partial trace + maximal mixing,
// tuneable variants, full/partial decoherence, incoherent sums of unitaries)
// is entropy non-decreasing by construction; custom channels earn their
// monotonicity attestation through randomized testing at build time, and the
// attestation seed is recorded on the channel.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "entropyflow/linalg/vectorize.hpp"
#include "entropyflow/quantum/coarse_grain.hpp"
#include "entropyflow/random/sample.hpp"

namespace entropyflow {

enum class ChannelLabel {
    Maximal,
    PartialMaximal,
    PartialMaximalTuneable,
    FullDecoherence,
    PartialDecoherence,
    IncoherentSum,
    Custom,
};

inline const char* to_string(ChannelLabel label) {
    switch (label) {
    case ChannelLabel::Maximal: return "maximal";
    case ChannelLabel::PartialMaximal: return "partialMaximal";
    case ChannelLabel::PartialMaximalTuneable: return "partialMaximalTuneable";
    case ChannelLabel::FullDecoherence: return "fullDecoherence";
    case ChannelLabel::PartialDecoherence: return "partialDecoherence";
    case ChannelLabel::IncoherentSum: return "incoherentSum";
    case ChannelLabel::Custom: return "custom";
    }
    return "unknown";
}

/// Classical weights attached to a set of unitaries.
class UnitaryEnsemble {
public:
    UnitaryEnsemble(ProbabilityVector weights, std::vector<ComplexMatrix> unitaries)
        : weights_(std::move(weights)), unitaries_(std::move(unitaries)) {
        require(!unitaries_.empty(), ErrorKind::InvalidEnsemble, "empty unitary list");
        require(weights_.size() == unitaries_.size(), ErrorKind::InvalidEnsemble,
                "one weight per unitary required");
        const std::size_t n = unitaries_.front().rows();
        for (const ComplexMatrix& u : unitaries_) {
            require(u.is_square() && u.rows() == n, ErrorKind::InvalidEnsemble,
                    "unitaries must share one square dimension");
            require(max_abs(u.adjoint() * u - ComplexMatrix::identity(n)) <= 1e-10,
                    ErrorKind::InvalidEnsemble, "ensemble member is not unitary within 1e-10");
        }
    }

    /// Classical expectation over several ensembles with equal weight: the
    /// exact average channel, realized as one concatenated ensemble.
    static UnitaryEnsemble average(const std::vector<UnitaryEnsemble>& ensembles) {
        require(!ensembles.empty(), ErrorKind::InvalidEnsemble, "no ensembles to average");
        std::vector<double> weights;
        std::vector<ComplexMatrix> unitaries;
        const double share = 1.0 / static_cast<double>(ensembles.size());
        for (const UnitaryEnsemble& e : ensembles)
            for (std::size_t i = 0; i < e.size(); ++i) {
                weights.push_back(share * e.weights()[i]);
                unitaries.push_back(e.unitaries()[i]);
            }
        return UnitaryEnsemble(ProbabilityVector(std::move(weights)), std::move(unitaries));
    }

    std::size_t dim() const noexcept { return unitaries_.front().rows(); }
    std::size_t size() const noexcept { return unitaries_.size(); }
    const ProbabilityVector& weights() const noexcept { return weights_; }
    const std::vector<ComplexMatrix>& unitaries() const noexcept { return unitaries_; }

private:
    ProbabilityVector weights_;
    std::vector<ComplexMatrix> unitaries_;
};

/// sum_i p_i U_i^dagger rho U_i. Entropy non-decreasing by concavity.
inline DensityMatrix incoherent_sum(const UnitaryEnsemble& ensemble, const DensityMatrix& rho) {
    require(ensemble.dim() == rho.dim(), ErrorKind::InvalidEnsemble,
            "ensemble dimension does not match the state");
    ComplexMatrix out(rho.dim(), rho.dim());
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        const ComplexMatrix& u = ensemble.unitaries()[i];
        out = out + ensemble.weights()[i] * (u.adjoint() * rho.matrix() * u);
    }
    return DensityMatrix(hermitian_part(out), rho.bipartition());
}

class SuperScattering {
public:
    std::size_t dim() const noexcept { return dim_; }
    const ComplexMatrix& super_matrix() const noexcept { return super_; }
    ChannelLabel label() const noexcept { return label_; }
    bool is_monotone() const noexcept { return monotone_; }
    std::uint64_t attestation_seed() const noexcept { return attestation_seed_; }
    const std::optional<Bipartition>& bipartition() const noexcept { return bipartition_; }

    static SuperScattering identity(std::size_t n) {
        return maximal(n, 0.0);
    }

    static SuperScattering maximal(std::size_t n, double s) {
        detail::check_tuning(s);
        const double inv_n = 1.0 / static_cast<double>(n);
        auto action = [n, s, inv_n](const ComplexMatrix& x) {
            return (1.0 - s) * x + (s * inv_n * trace(x)) * ComplexMatrix::identity(n);
        };
        return build(n, action, ChannelLabel::Maximal, true, {}, kDefaultSeed);
    }

    static SuperScattering partial_maximal(std::size_t dim_a, std::size_t dim_b) {
        return partial_maximal_tuneable(dim_a, dim_b, 1.0, ChannelLabel::PartialMaximal);
    }

    static SuperScattering partial_maximal_tuneable(std::size_t dim_a, std::size_t dim_b,
                                                    double s,
                                                    ChannelLabel label =
                                                        ChannelLabel::PartialMaximalTuneable) {
        detail::check_tuning(s);
        const std::size_t n = dim_a * dim_b;
        const double inv_b = 1.0 / static_cast<double>(dim_b);
        auto action = [=](const ComplexMatrix& x) {
            const ComplexMatrix mixed = tensor_product(
                partial_trace(x, dim_a, dim_b, Subsystem::A),
                inv_b * ComplexMatrix::identity(dim_b));
            return (1.0 - s) * x + s * mixed;
        };
        return build(n, action, label, true, Bipartition{dim_a, dim_b}, kDefaultSeed);
    }

    static SuperScattering full_decoherence(const ProjectorBasis& basis) {
        return partial_decoherence(basis, 1.0, ChannelLabel::FullDecoherence);
    }

    static SuperScattering partial_decoherence(const ProjectorBasis& basis, double s,
                                               ChannelLabel label =
                                                   ChannelLabel::PartialDecoherence) {
        detail::check_tuning(s);
        auto action = [basis, s](const ComplexMatrix& x) {
            return (1.0 - s) * x + s * basis.project_diagonal(x);
        };
        return build(basis.dim(), action, label, true, {}, kDefaultSeed);
    }

    static SuperScattering incoherent_sum_channel(const UnitaryEnsemble& ensemble) {
        auto action = [ensemble](const ComplexMatrix& x) {
            ComplexMatrix out(x.rows(), x.cols());
            for (std::size_t i = 0; i < ensemble.size(); ++i) {
                const ComplexMatrix& u = ensemble.unitaries()[i];
                out = out + ensemble.weights()[i] * (u.adjoint() * x * u);
            }
            return out;
        };
        return build(ensemble.dim(), action, ChannelLabel::IncoherentSum, true, {},
                     kDefaultSeed);
    }

    /// Custom channel from an arbitrary linear action. Monotonicity is
    /// attested by randomized testing (200 samples); a failed sample marks
    /// the channel non-monotone.
    static SuperScattering custom(std::size_t n, const MatrixAction& action,
                                  std::uint64_t seed = kDefaultSeed,
                                  std::optional<Bipartition> bipartition = {}) {
        SuperScattering chan = assemble(n, action, ChannelLabel::Custom, bipartition, seed);
        chan.monotone_ = chan.passes_monotonicity_samples(200);
        return chan;
    }

    /// Wrap an explicit superoperator matrix with a caller-supplied
    /// monotonicity claim, bypassing attestation. Exists for fault-injection
    /// tests: nothing here verifies the claim.
    static SuperScattering unchecked_from_matrix(ComplexMatrix super, ChannelLabel label,
                                                 bool claimed_monotone,
                                                 std::optional<Bipartition> bipartition = {},
                                                 std::uint64_t seed = kDefaultSeed) {
        require(super.is_square(), ErrorKind::DimensionMismatch,
                "superoperator matrix must be square");
        std::size_t n = 1;
        while (n * n < super.rows()) ++n;
        require(n * n == super.rows(), ErrorKind::DimensionMismatch,
                "superoperator size must be a perfect square");
        SuperScattering chan;
        chan.dim_ = n;
        chan.super_ = std::move(super);
        chan.label_ = label;
        chan.monotone_ = claimed_monotone;
        chan.bipartition_ = bipartition;
        chan.attestation_seed_ = seed;
        return chan;
    }

    /// unvec(superMatrix * vec(rho)).
    ComplexMatrix apply_matrix(const ComplexMatrix& rho) const {
        require(rho.is_square() && rho.rows() == dim_, ErrorKind::DimensionMismatch,
                "state dimension does not match the channel");
        return hermitian_part(unvectorize(super_ * vectorize(rho), dim_));
    }

private:
    static constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ULL;

    static SuperScattering assemble(std::size_t n, const MatrixAction& action,
                                    ChannelLabel label, std::optional<Bipartition> bipartition,
                                    std::uint64_t seed) {
        SuperScattering chan;
        chan.dim_ = n;
        chan.super_ = vectorize_superoperator(n, action, seed);
        chan.label_ = label;
        chan.bipartition_ = bipartition;
        chan.attestation_seed_ = seed;
        return chan;
    }

    static SuperScattering build(std::size_t n, const MatrixAction& action, ChannelLabel label,
                                 bool monotone, std::optional<Bipartition> bipartition,
                                 std::uint64_t seed) {
        SuperScattering chan = assemble(n, action, label, bipartition, seed);
        chan.monotone_ = monotone;
        chan.spot_check(monotone ? 8 : 0);
        return chan;
    }

    /// Construction-time invariants: trace preservation and positivity on
    /// random valid states, plus the monotonicity attestation when claimed.
    void spot_check(int monotone_samples) const {
        Rng rng(attestation_seed_);
        for (int i = 0; i < 4; ++i) {
            const DensityMatrix rho = bipartition_
                                          ? random_bipartite_density_matrix(
                                                rng, bipartition_->dim_a, bipartition_->dim_b)
                                          : random_density_matrix(rng, dim_);
            const ComplexMatrix out = apply_matrix(rho.matrix());
            require(std::abs(trace(out).real() - 1.0) <= 1e-10, ErrorKind::NumericalFailure,
                    "channel is not trace preserving within 1e-10");
            require(hermitian_eigenvalues(out).front() >= -1e-9, ErrorKind::PositivityViolation,
                    "channel output failed the positivity spot-check");
        }
        if (monotone_samples > 0)
            require(passes_monotonicity_samples(monotone_samples), ErrorKind::NumericalFailure,
                    "table channel failed its entropy-monotonicity attestation");
    }

    bool passes_monotonicity_samples(int samples) const {
        Rng rng(attestation_seed_ ^ 0xa5a5a5a5a5a5a5a5ULL);
        for (int i = 0; i < samples; ++i) {
            const DensityMatrix rho = bipartition_
                                          ? random_bipartite_density_matrix(
                                                rng, bipartition_->dim_a, bipartition_->dim_b)
                                          : random_density_matrix(rng, dim_);
            DensityMatrix out(apply_matrix(rho.matrix()), rho.bipartition());
            if (von_neumann_entropy(out) < von_neumann_entropy(rho) - 1e-9) return false;
        }
        return true;
    }

    std::size_t dim_ = 0;
    ComplexMatrix super_;
    ChannelLabel label_ = ChannelLabel::Custom;
    bool monotone_ = false;
    std::optional<Bipartition> bipartition_;
    std::uint64_t attestation_seed_ = kDefaultSeed;
};

/// Channel application as a state-to-state map.
inline DensityMatrix apply(const SuperScattering& channel, const DensityMatrix& rho) {
    try {
        return DensityMatrix(channel.apply_matrix(rho.matrix()), rho.bipartition());
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::InvalidState)
            fail(ErrorKind::PositivityViolation,
                 "channel output is not a valid density matrix: " + std::string(e.what()));
        throw;
    }
}

/// a after b: superMatrix = a.superMatrix * b.superMatrix.
inline SuperScattering compose(const SuperScattering& a, const SuperScattering& b) {
    require(a.dim() == b.dim(), ErrorKind::DimensionMismatch,
            "channel composition dimension mismatch");
    std::optional<Bipartition> bip = a.bipartition() ? a.bipartition() : b.bipartition();
    return SuperScattering::unchecked_from_matrix(a.super_matrix() * b.super_matrix(),
                                                  ChannelLabel::Custom,
                                                  a.is_monotone() && b.is_monotone(), bip,
                                                  a.attestation_seed());
}

/// The Laplacian-like generator Delta = superMatrix - I. Trace functional
/// annihilates it: tr(unvec(Delta vec(rho))) = 0 for every state.
inline ComplexMatrix generator(const SuperScattering& channel) {
    return channel.super_matrix() - ComplexMatrix::identity(channel.dim() * channel.dim());
}

} // namespace entropyflow
