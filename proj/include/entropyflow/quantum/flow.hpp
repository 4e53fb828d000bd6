// Entropy flow along a tuneable coarse-graining family, sampled on an s-grid,
// with the per-family lower and upper bounds carried alongside.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "entropyflow/quantum/coarse_grain.hpp"

namespace entropyflow {

enum class FlowFamily {
    MaximalMix,
    TuneablePartialTrace,
    TuneableAsymmetricMix,
    PartialDecoherence,
};

inline const char* to_string(FlowFamily family) {
    switch (family) {
    case FlowFamily::MaximalMix: return "maximalMix";
    case FlowFamily::TuneablePartialTrace: return "tuneablePartialTrace";
    case FlowFamily::TuneableAsymmetricMix: return "tuneableAsymmetricMix";
    case FlowFamily::PartialDecoherence: return "partialDecoherence";
    }
    return "unknown";
}

struct FlowSample {
    double s;
    double entropy;
    double hidden_information; // S(rho_s) - S(rho_0)
    double lower_bound;        // concavity bound on S(rho_s)
    double upper_bound;        // fixed-point entropy bound on S(rho_s)
};

/// 21 uniform points on [0, 1] by default.
inline std::vector<double> uniform_s_grid(std::size_t points = 21) {
    require(points >= 2, ErrorKind::ParameterOutOfRange, "grid needs at least two points");
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i)
        grid[i] = static_cast<double>(i) / static_cast<double>(points - 1);
    return grid;
}

inline std::vector<FlowSample> entropy_flow_curve(FlowFamily family, const DensityMatrix& rho,
                                                  std::span<const double> s_grid,
                                                  const ProjectorBasis* basis = nullptr) {
    require(!s_grid.empty(), ErrorKind::ParameterOutOfRange, "empty s-grid");
    for (std::size_t i = 0; i < s_grid.size(); ++i) {
        require(s_grid[i] >= 0.0 && s_grid[i] <= 1.0, ErrorKind::ParameterOutOfRange,
                "s-grid values must lie in [0, 1]");
        require(i == 0 || s_grid[i] >= s_grid[i - 1], ErrorKind::ParameterOutOfRange,
                "s-grid must be ascending");
    }

    const double s0 = von_neumann_entropy(rho);
    const double log_dim = std::log(static_cast<double>(rho.dim()));

    // Family-specific endpoint entropy (the upper bound) and state map.
    double endpoint = 0.0;
    ProjectorBasis computational = ProjectorBasis::computational(rho.dim());
    const ProjectorBasis& deco_basis = basis != nullptr ? *basis : computational;
    switch (family) {
    case FlowFamily::MaximalMix:
        endpoint = log_dim;
        break;
    case FlowFamily::TuneablePartialTrace: {
        const double s_a = von_neumann_entropy(rho.marginal(Subsystem::A));
        const double s_b = von_neumann_entropy(rho.marginal(Subsystem::B));
        endpoint = s_a + s_b;
        break;
    }
    case FlowFamily::TuneableAsymmetricMix: {
        const Bipartition& bip = rho.require_bipartition();
        endpoint = von_neumann_entropy(rho.marginal(Subsystem::A)) +
                   std::log(static_cast<double>(bip.dim_b));
        break;
    }
    case FlowFamily::PartialDecoherence:
        endpoint = von_neumann_entropy(decohere_full(rho, deco_basis));
        break;
    }

    std::vector<FlowSample> samples;
    samples.reserve(s_grid.size());
    for (double s : s_grid) {
        DensityMatrix rho_s = [&]() {
            switch (family) {
            case FlowFamily::MaximalMix: return maximal_mix(rho, s);
            case FlowFamily::TuneablePartialTrace: return tuneable_partial_trace(rho, s);
            case FlowFamily::TuneableAsymmetricMix: return tuneable_asymmetric_mix(rho, s);
            case FlowFamily::PartialDecoherence: return decohere_partial(rho, deco_basis, s);
            }
            fail(ErrorKind::ParameterOutOfRange, "unknown flow family");
        }();
        FlowSample sample;
        sample.s = s;
        sample.entropy = von_neumann_entropy(rho_s);
        sample.hidden_information = sample.entropy - s0;
        sample.lower_bound = s0 + s * (endpoint - s0); // concavity of S
        sample.upper_bound = endpoint;
        samples.push_back(sample);
    }
    return samples;
}

} // namespace entropyflow
