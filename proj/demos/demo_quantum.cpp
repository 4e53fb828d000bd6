// Walkthrough: coarse-grain a Bell state along the tuneable partial-trace
// family and run decoherence-driven diffusion on Hilbert space.

#include <cstdio>

#include "entropyflow/channels/diffusion.hpp"
#include "entropyflow/quantum/flow.hpp"

using namespace entropyflow;

int main() {
    const DensityMatrix bell = DensityMatrix::bell_phi_plus();

    std::printf("Bell state under the tuneable partial trace:\n");
    std::printf("%6s %12s %12s %12s %12s\n", "s", "S(rho_s)", "I_hidden", "lower", "upper");
    const auto grid = uniform_s_grid(11);
    for (const auto& p : entropy_flow_curve(FlowFamily::TuneablePartialTrace, bell, grid))
        std::printf("%6.2f %12.6f %12.6f %12.6f %12.6f\n", p.s, p.entropy,
                    p.hidden_information, p.lower_bound, p.upper_bound);

    std::printf("\n|+><+| under decoherence-generated Hilbert-space diffusion:\n");
    const DensityMatrix plus = DensityMatrix::pure({Complex{1.0, 0.0}, Complex{1.0, 0.0}});
    const SuperScattering chan =
        SuperScattering::full_decoherence(ProjectorBasis::computational(2));
    std::printf("%6s %12s %16s\n", "t", "S(rho_t)", "offDiagonal");
    for (double t : {0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
        const DensityMatrix rho_t = hilbert_diffusion(chan, plus, t);
        std::printf("%6.2f %12.6f %16.9f\n", t, von_neumann_entropy(rho_t),
                    rho_t.matrix()(0, 1).real());
    }
    return 0;
}
