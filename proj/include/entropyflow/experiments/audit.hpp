// The invariant audit: every property suite of the toolkit, run under one
// seed, reported as machine-readable JSON with a counterexample payload for
// any failure. Deterministic given the seed; contains no timing, so repeated
// runs are byte-identical.

#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "entropyflow/channels/diffusion.hpp"
#include "entropyflow/classical/aggregation.hpp"
#include "entropyflow/classical/flow.hpp"
#include "entropyflow/experiments/csv.hpp"
#include "entropyflow/experiments/config.hpp"
#include "entropyflow/quantum/flow.hpp"

namespace entropyflow {

struct AuditOptions {
    std::uint64_t seed = 1;
    std::size_t max_dim = 16;      // cap on quantum dimensions
    std::size_t grid_cells = 512;  // cap on classical grid size
    bool inject_fault = false;     // add a deliberately tampered channel
};

namespace audit_detail {

/// One invariant suite. A sample's "violation" is (observed - allowed); any
/// value above zero fails the check and captures a counterexample.
class Check {
public:
    Check(std::string name, std::string inequality)
        : name_(std::move(name)), inequality_(std::move(inequality)) {}

    void sample(double violation, const std::function<Json()>& describe) {
        ++samples_;
        if (violation > worst_) {
            worst_ = violation;
            if (violation > 0.0 && counterexample_.is_null()) counterexample_ = describe();
        }
    }

    void sample(double violation, const std::string& detail) {
        sample(violation, [&]() { return Json{{"detail", detail}}; });
    }

    void error(const std::string& what) {
        ++samples_;
        errors_.push_back(what);
    }

    Json to_json() const {
        Json j;
        j["name"] = name_;
        j["inequality"] = inequality_;
        j["passed"] = passed();
        j["samples"] = samples_;
        j["worstViolation"] = worst_;
        if (!counterexample_.is_null()) j["counterexample"] = counterexample_;
        if (!errors_.empty()) j["errors"] = errors_;
        return j;
    }

    bool passed() const { return worst_ <= 0.0 && errors_.empty(); }

private:
    std::string name_;
    std::string inequality_;
    std::size_t samples_ = 0;
    double worst_ = -std::numeric_limits<double>::infinity();
    Json counterexample_;
    std::vector<std::string> errors_;
};

inline std::vector<std::size_t> quantum_dims(std::size_t max_dim) {
    std::vector<std::size_t> dims;
    for (std::size_t n : {std::size_t{2}, std::size_t{3}, std::size_t{4}, std::size_t{6},
                          std::size_t{8}, std::size_t{12}, std::size_t{16}})
        if (n <= max_dim) dims.push_back(n);
    if (dims.empty()) dims.push_back(2);
    return dims;
}

inline Json state_payload(std::size_t sample, std::size_t dim, double lhs, double rhs) {
    return Json{{"sample", sample}, {"dim", dim}, {"lhs", lhs}, {"rhs", rhs}};
}

} // namespace audit_detail

class Audit {
public:
    explicit Audit(const AuditOptions& options) : opt_(options) {}

    Json run() {
        checks_.clear();
        linalg_suite();
        classical_suite();
        quantum_suite();
        channel_suite();
        cli_suite();
        if (opt_.inject_fault) injected_fault_suite();

        Json report;
        report["report"] = "entropyflow-audit";
        report["version"] = 1;
        report["seed"] = opt_.seed;
        report["maxDim"] = opt_.max_dim;
        report["injectFault"] = opt_.inject_fault;
        bool all = true;
        Json checks = Json::array();
        for (const auto& c : checks_) {
            all = all && c.passed();
            checks.push_back(c.to_json());
        }
        report["checks"] = checks;
        report["allPassed"] = all;
        return report;
    }

private:
    using Check = audit_detail::Check;

    Check& add(const std::string& name, const std::string& inequality) {
        checks_.emplace_back(name, inequality);
        return checks_.back();
    }

    Rng rng(std::uint64_t salt) const { return Rng(opt_.seed ^ salt); }

    // ---------------------------------------------------------------- linalg

    void linalg_suite() {
        auto& rec = add("linalg.eigen-reconstruction",
                        "||V L V^dag - A||_F <= 1e-10 ||A||_F");
        auto& uni = add("linalg.eigen-unitarity", "||V^dag V - I||_F <= 1e-10");
        Rng r = rng(0x11);
        for (std::size_t n : {2, 3, 5, 8, 16, 32, 64}) {
            const ComplexMatrix a = random_hermitian(r, n);
            const HermitianEigenSystem sys = hermitian_eigendecompose(a);
            ComplexMatrix lambda(n, n);
            for (std::size_t k = 0; k < n; ++k) lambda(k, k) = sys.eigenvalues[k];
            const double recon =
                frobenius_norm(sys.eigenvectors * lambda * sys.eigenvectors.adjoint() - a);
            rec.sample(recon - 1e-10 * frobenius_norm(a),
                       [&] { return Json{{"dim", n}, {"error", recon}}; });
            const double unitary = frobenius_norm(
                sys.eigenvectors.adjoint() * sys.eigenvectors - ComplexMatrix::identity(n));
            uni.sample(unitary - 1e-10, [&] { return Json{{"dim", n}, {"error", unitary}}; });
        }

        auto& inv = add("linalg.matrix-exp-inverse", "||f_exp(A) f_exp(-A) - I||_F <= 1e-8");
        Rng r2 = rng(0x12);
        for (std::size_t n : {2, 4, 8, 16}) {
            const ComplexMatrix a = random_hermitian_with_spectrum(r2, n, -5.0, 5.0);
            const ComplexMatrix e = matrix_function(a, [](double x) { return std::exp(x); });
            const ComplexMatrix em = matrix_function(a, [](double x) { return std::exp(-x); });
            const double err = frobenius_norm(e * em - ComplexMatrix::identity(n));
            inv.sample(err - 1e-8, [&] { return Json{{"dim", n}, {"error", err}}; });
        }

        auto& pt = add("linalg.partial-trace-tensor-identity",
                       "tr_B(a (x) b) == tr(b) a within 1e-10");
        Rng r3 = rng(0x13);
        for (int i = 0; i < 10; ++i) {
            const std::size_t na = 2 + r3.index(3), nb = 2 + r3.index(3);
            const ComplexMatrix a = random_hermitian(r3, na), b = random_hermitian(r3, nb);
            const ComplexMatrix lhs = partial_trace(tensor_product(a, b), na, nb, Subsystem::A);
            const double err = max_abs(lhs - trace(b) * a);
            pt.sample(err - 1e-10, [&] { return Json{{"sample", i}, {"error", err}}; });
        }

        auto& vecrt = add("linalg.vec-roundtrip", "unvec(vec(X)) == X exactly");
        Rng r4 = rng(0x14);
        for (int i = 0; i < 10; ++i) {
            const std::size_t n = 2 + r4.index(7);
            const ComplexMatrix x = random_complex_gaussian(r4, n, n);
            vecrt.sample(max_abs(unvectorize(vectorize(x), n) - x),
                         [&] { return Json{{"sample", i}, {"dim", n}}; });
        }
    }

    // -------------------------------------------------------------- classical

    GridDensity random_density(Rng& r) const {
        const bool two_d = r.uniform() < 0.3;
        if (two_d) {
            const std::size_t nx = 4 + r.index(12), ny = 4 + r.index(12);
            return random_grid_density(r, {nx, ny}, {1.0 / static_cast<double>(nx),
                                                     1.0 / static_cast<double>(ny)});
        }
        const std::size_t n = std::min<std::size_t>(8 + r.index(56), opt_.grid_cells);
        return random_grid_density(r, {n}, {1.0 / static_cast<double>(n)});
    }

    static DiffusionSpec random_spec(Rng& r, const GridDensity& rho) {
        const double sigma = r.uniform(0.2, 2.0);
        double coeff = 0.0;
        for (double h : rho.spacing()) coeff += 2.0 / (h * h);
        const double step = r.uniform(0.3, 0.95) / (sigma * coeff);
        if (r.uniform() < 0.5) return DiffusionSpec::simple(sigma, step);
        // position- and density-dependent isotropic tensor, bounded by sigma
        const std::size_t d = rho.dims();
        auto tensor = [sigma, d](const std::array<double, 3>& x, double v) {
            const double s = sigma * (0.25 + 0.5 * x[0] + 0.25 / (1.0 + v));
            std::vector<double> t(d * d, 0.0);
            for (std::size_t a = 0; a < d; ++a) t[a * d + a] = s;
            return t;
        };
        return DiffusionSpec::generalized(tensor, step);
    }

    void classical_suite() {
        auto& mass = add("classical.diffusion-mass-conservation",
                         "|mass(step(rho)) - mass(rho)| <= 1e-12");
        auto& nonneg = add("classical.diffusion-nonnegativity", "min step(rho) >= -1e-15");
        auto& mono = add("classical.diffusion-entropy-monotone",
                         "S(step(rho)) >= S(rho) - 1e-12");
        Rng r = rng(0x21);
        for (int i = 0; i < 40; ++i) {
            const GridDensity rho = random_density(r);
            const DiffusionSpec spec = random_spec(r, rho);
            const GridDensity next = diffusion_step(rho, spec);
            mass.sample(std::abs(next.mass() - rho.mass()) - 1e-12,
                        [&] { return Json{{"sample", i}, {"massBefore", rho.mass()},
                                          {"massAfter", next.mass()}}; });
            double min_v = 0.0;
            for (double v : next.values()) min_v = std::min(min_v, v);
            nonneg.sample(-min_v - 1e-15, [&] { return Json{{"sample", i}, {"min", min_v}}; });
            const double s0 = continuum_entropy(rho), s1 = continuum_entropy(next);
            mono.sample(s0 - s1 - 1e-12,
                        [&] { return audit_detail::state_payload(i, rho.cell_count(), s1, s0); });
        }

        auto& dom = add("classical.box-entropy-dominance", "S(rho_B) >= S(rho) - 1e-9");
        auto& ident = add("classical.box-entropy-identity",
                          "S(rho_B) == S_B + ln(rho* Vbar) within 1e-9");
        auto& invar = add("classical.hidden-information-invariance",
                          "I_hidden independent of rho* within 1e-9 for x0.1, x1, x10");
        Rng r2 = rng(0x22);
        for (int i = 0; i < 60; ++i) {
            const GridDensity rho = random_density(r2);
            const BoxPartition part =
                random_partition(r2, rho, 2 + r2.index(std::min<std::size_t>(rho.cell_count() - 1, 9)));
            const GridDensity boxed = boxwise_density(rho, part);
            const double s_rho = continuum_entropy(rho), s_boxed = continuum_entropy(boxed);
            dom.sample(s_rho - s_boxed - 1e-9,
                       [&] { return audit_detail::state_payload(i, rho.cell_count(), s_boxed, s_rho); });
            const ProbabilityVector p = box_probabilities(rho, part);
            const double rhs = shannon_entropy(p) +
                               std::log(rho.rho_star() * geometric_mean_volume(p, part));
            ident.sample(std::abs(s_boxed - rhs) - 1e-9,
                         [&] { return audit_detail::state_payload(i, part.box_count(), s_boxed, rhs); });
            const double base = box_hidden_information(rho, part);
            double worst = 0.0;
            for (double lambda : {0.1, 10.0}) {
                const double alt =
                    box_hidden_information(rho.with_rho_star(lambda * rho.rho_star()), part);
                worst = std::max(worst, std::abs(alt - base));
            }
            invar.sample(worst - 1e-9, [&] { return Json{{"sample", i}, {"spread", worst}}; });
        }

        auto& agg = add("classical.aggregation-monotone",
                        "S(aggregated) >= S(p) - 1e-12 for naive and asymmetric");
        Rng r3 = rng(0x23);
        for (int i = 0; i < 300; ++i) {
            const std::size_t n = 2 + r3.index(31);
            const ProbabilityVector p = random_probability_vector(r3, n);
            const std::size_t a = r3.index(n);
            std::size_t b = r3.index(n - 1);
            if (b >= a) ++b;
            const double before = shannon_entropy(p);
            const ProbabilityVector naive = aggregate_naive(p, a, b);
            const ProbabilityVector asym =
                aggregate_asymmetric(p, a, b, r3.uniform(0.01, 0.99));
            const double worst = std::max(before - shannon_entropy(naive),
                                          before - shannon_entropy(asym));
            agg.sample(worst - 1e-12,
                       [&] { return Json{{"sample", i}, {"dim", n}, {"drop", worst}}; });
        }

        auto& endp = add("classical.aggregation-endpoint",
                         "iterated naive aggregation reaches ln N within 1e-9");
        Rng r4 = rng(0x24);
        for (std::size_t n : {2, 5, 16, 32}) {
            ProbabilityVector p = random_probability_vector(r4, n);
            for (int sweep = 0; sweep < 4000; ++sweep) {
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = a + 1; b < n; ++b) p = aggregate_naive(p, a, b);
                if (negentropy(p) <= 1e-12) break;
            }
            const double gap = std::log(static_cast<double>(n)) - shannon_entropy(p);
            endp.sample(std::abs(gap) - 1e-9, [&] { return Json{{"dim", n}, {"gap", gap}}; });
        }
    }

    // ---------------------------------------------------------------- quantum

    void quantum_suite() {
        const auto dims = audit_detail::quantum_dims(opt_.max_dim);

        auto& valid = add("quantum.output-state-validity",
                          "every operation returns a valid density matrix");
        Rng r = rng(0x31);
        for (int i = 0; i < 25; ++i) {
            const std::size_t na = 2 + r.index(3), nb = 2 + r.index(3);
            try {
                const DensityMatrix rho = random_bipartite_density_matrix(r, na, nb);
                const double s = r.uniform();
                const ProjectorBasis basis = r.uniform() < 0.5
                                                 ? ProjectorBasis::computational(rho.dim())
                                                 : random_projector_basis(r, rho.dim());
                maximal_mix(rho, s);
                reduced_product(rho);
                tuneable_partial_trace(rho, s);
                asymmetric_mix(rho);
                tuneable_asymmetric_mix(rho, s);
                decohere_full(rho, basis);
                decohere_partial(rho, basis, s);
                valid.sample(0.0, "ok");
            } catch (const Error& e) {
                valid.error(e.what());
            }
        }

        auto& conc = add("quantum.concavity",
                         "S((1-s)r0 + s r1) >= (1-s)S(r0) + sS(r1) - 1e-9");
        Rng r2 = rng(0x32);
        for (int i = 0; i < 60; ++i) {
            const std::size_t n = dims[r2.index(dims.size())];
            const DensityMatrix r0 = random_density_matrix(r2, n);
            const DensityMatrix r1 = random_density_matrix(r2, n);
            const double s = r2.uniform();
            const DensityMatrix mix(
                hermitian_part((1.0 - s) * r0.matrix() + s * r1.matrix()));
            const double lhs = von_neumann_entropy(mix);
            const double rhs = (1.0 - s) * von_neumann_entropy(r0) + s * von_neumann_entropy(r1);
            conc.sample(rhs - lhs - 1e-9, [&] { return audit_detail::state_payload(i, n, lhs, rhs); });
        }

        auto& tri = add("quantum.triangle-inequalities",
                        "|S_A - S_B| - 1e-9 <= S_AB <= S_A + S_B + 1e-9");
        Rng r3 = rng(0x33);
        for (int i = 0; i < 60; ++i) {
            const std::size_t na = 2 + r3.index(3), nb = 2 + r3.index(3);
            const DensityMatrix rho = random_bipartite_density_matrix(r3, na, nb);
            const double s_ab = von_neumann_entropy(rho);
            const double s_a = von_neumann_entropy(rho.marginal(Subsystem::A));
            const double s_b = von_neumann_entropy(rho.marginal(Subsystem::B));
            const double viol = std::max(std::abs(s_a - s_b) - s_ab, s_ab - (s_a + s_b));
            tri.sample(viol - 1e-9, [&] {
                return Json{{"sample", i}, {"S_A", s_a}, {"S_B", s_b}, {"S_AB", s_ab}};
            });
        }

        auto& klein = add("quantum.klein-inequality", "relative_entropy(rho, sigma) >= -1e-9");
        Rng r4 = rng(0x34);
        for (int i = 0; i < 100; ++i) {
            const std::size_t n = dims[r4.index(dims.size())];
            const double d = relative_entropy(random_density_matrix(r4, n),
                                              random_density_matrix(r4, n));
            klein.sample(-d - 1e-9, [&] { return Json{{"sample", i}, {"dim", n}, {"value", d}}; });
        }

        auto& deco = add("quantum.decoherence-identity",
                         "S(rho_D) - S(rho) == relative_entropy(rho, rho_D) within 1e-9");
        Rng r5 = rng(0x35);
        for (int i = 0; i < 40; ++i) {
            const std::size_t n = dims[r5.index(dims.size())];
            const DensityMatrix rho = random_density_matrix(r5, n);
            const ProjectorBasis basis = r5.uniform() < 0.5
                                             ? ProjectorBasis::computational(n)
                                             : random_projector_basis(r5, n);
            const DensityMatrix rho_d = decohere_full(rho, basis);
            const double gap = von_neumann_entropy(rho_d) - von_neumann_entropy(rho);
            const double rel = relative_entropy(rho, rho_d);
            deco.sample(std::abs(gap - rel) - 1e-9,
                        [&] { return audit_detail::state_payload(i, n, gap, rel); });
        }

        auto& mono = add("quantum.family-monotonicity",
                         "S(rho_s) non-decreasing on the s-grid within 1e-9");
        auto& bounds = add("quantum.hidden-information-bounds",
                           "family lower/upper bounds on S(rho_s) within 1e-9");
        Rng r6 = rng(0x36);
        const auto grid = uniform_s_grid(21);
        for (int i = 0; i < 10; ++i) {
            const std::size_t na = 2 + r6.index(3), nb = 2 + r6.index(3);
            const DensityMatrix rho = random_bipartite_density_matrix(r6, na, nb);
            for (FlowFamily family :
                 {FlowFamily::MaximalMix, FlowFamily::TuneablePartialTrace,
                  FlowFamily::TuneableAsymmetricMix, FlowFamily::PartialDecoherence}) {
                const auto curve = entropy_flow_curve(family, rho, grid);
                for (std::size_t k = 0; k < curve.size(); ++k) {
                    if (k > 0)
                        mono.sample(curve[k - 1].entropy - curve[k].entropy - 1e-9, [&] {
                            return Json{{"sample", i}, {"family", to_string(family)},
                                        {"s", curve[k].s}};
                        });
                    const double viol = std::max(curve[k].lower_bound - curve[k].entropy,
                                                 curve[k].entropy - curve[k].upper_bound);
                    bounds.sample(viol - 1e-9, [&] {
                        return Json{{"sample", i}, {"family", to_string(family)},
                                    {"s", curve[k].s}, {"entropy", curve[k].entropy},
                                    {"lower", curve[k].lower_bound},
                                    {"upper", curve[k].upper_bound}};
                    });
                }
            }
        }

        auto& idem = add("quantum.idempotence",
                         "decohere_full and reduced_product are idempotent within 1e-10");
        Rng r7 = rng(0x37);
        for (int i = 0; i < 20; ++i) {
            const std::size_t na = 2 + r7.index(2), nb = 2 + r7.index(2);
            const DensityMatrix rho = random_bipartite_density_matrix(r7, na, nb);
            const DensityMatrix rp = reduced_product(rho);
            const double v1 = max_abs(reduced_product(rp).matrix() - rp.matrix());
            const ProjectorBasis basis = random_projector_basis(r7, rho.dim());
            const DensityMatrix d1 = decohere_full(rho, basis);
            const double v2 = max_abs(decohere_full(d1, basis).matrix() - d1.matrix());
            idem.sample(std::max(v1, v2) - 1e-10,
                        [&] { return Json{{"sample", i}, {"reducedProduct", v1}, {"decohere", v2}}; });
        }
    }

    // --------------------------------------------------------------- channels

    struct TableEntry {
        std::string name;
        SuperScattering channel;
        std::function<DensityMatrix(const DensityMatrix&)> direct;
        std::function<DensityMatrix(const DensityMatrix&)> fixed_point;
        std::function<DensityMatrix(Rng&)> sample_state;
    };

    std::vector<TableEntry> channel_table() const {
        std::vector<TableEntry> table;
        const ProjectorBasis comp4 = ProjectorBasis::computational(4);

        auto plain_sampler = [](std::size_t n) {
            return [n](Rng& r) { return random_density_matrix(r, n); };
        };
        auto bip_sampler = [](std::size_t na, std::size_t nb) {
            return [na, nb](Rng& r) { return random_bipartite_density_matrix(r, na, nb); };
        };

        table.push_back({"maximal(s=0.7)", SuperScattering::maximal(4, 0.7),
                         [](const DensityMatrix& rho) { return maximal_mix(rho, 0.7); },
                         [](const DensityMatrix& rho) {
                             return DensityMatrix::maximally_mixed(rho.dim(), rho.bipartition());
                         },
                         plain_sampler(4)});
        table.push_back({"partialMaximal(2x3)", SuperScattering::partial_maximal(2, 3),
                         [](const DensityMatrix& rho) { return asymmetric_mix(rho); },
                         [](const DensityMatrix& rho) { return asymmetric_mix(rho); },
                         bip_sampler(2, 3)});
        table.push_back({"partialMaximalTuneable(2x2,s=0.4)",
                         SuperScattering::partial_maximal_tuneable(2, 2, 0.4),
                         [](const DensityMatrix& rho) { return tuneable_asymmetric_mix(rho, 0.4); },
                         [](const DensityMatrix& rho) { return asymmetric_mix(rho); },
                         bip_sampler(2, 2)});
        table.push_back({"fullDecoherence(N=4)", SuperScattering::full_decoherence(comp4),
                         [comp4](const DensityMatrix& rho) { return decohere_full(rho, comp4); },
                         [comp4](const DensityMatrix& rho) { return decohere_full(rho, comp4); },
                         plain_sampler(4)});
        table.push_back({"partialDecoherence(N=4,s=0.6)",
                         SuperScattering::partial_decoherence(comp4, 0.6),
                         [comp4](const DensityMatrix& rho) {
                             return decohere_partial(rho, comp4, 0.6);
                         },
                         [comp4](const DensityMatrix& rho) { return decohere_full(rho, comp4); },
                         plain_sampler(4)});

        // Pauli ensemble {I, X, Z} with equal weights: unique fixed point I/2.
        const ComplexMatrix pauli_x = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
        const ComplexMatrix pauli_z = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
        const UnitaryEnsemble pauli(
            ProbabilityVector({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}),
            {ComplexMatrix::identity(2), pauli_x, pauli_z});
        table.push_back({"incoherentSum(pauli)", SuperScattering::incoherent_sum_channel(pauli),
                         [pauli](const DensityMatrix& rho) { return incoherent_sum(pauli, rho); },
                         [](const DensityMatrix& rho) {
                             return DensityMatrix::maximally_mixed(rho.dim(), rho.bipartition());
                         },
                         plain_sampler(2)});
        return table;
    }

    void channel_suite() {
        auto table = channel_table();

        auto& agree = add("channels.table-agreement",
                          "vectorized channel equals the direct operation within 1e-10");
        Rng r = rng(0x41);
        for (const auto& entry : table) {
            for (int i = 0; i < 20; ++i) {
                const DensityMatrix rho = entry.sample_state(r);
                const double err =
                    max_abs(apply(entry.channel, rho).matrix() - entry.direct(rho).matrix());
                agree.sample(err - 1e-10, [&] {
                    return Json{{"channel", entry.name}, {"sample", i}, {"error", err}};
                });
            }
        }

        auto& gen = add("channels.generator-trace",
                        "tr(unvec(Delta vec(E_k))) == 0 within 1e-10 on all matrix units");
        for (const auto& entry : table) {
            const ComplexMatrix delta = generator(entry.channel);
            const std::size_t n = entry.channel.dim();
            for (std::size_t k = 0; k < n * n; ++k) {
                const Complex t =
                    trace(unvectorize(delta * vectorize(matrix_unit(n, k)), n));
                gen.sample(std::abs(t) - 1e-10, [&] {
                    return Json{{"channel", entry.name}, {"unit", k}, {"trace", std::abs(t)}};
                });
            }
        }

        auto& semi = add("channels.semigroup",
                         "diffuse(t1+t2) == diffuse(t2) after diffuse(t1) within 1e-9");
        auto& dmono = add("channels.diffusion-monotone",
                          "S(rho_t) non-decreasing on t in [0,10] within 1e-9");
        auto& conv = add("channels.convergence-fixed-points",
                         "||rho_40 - fixedPoint(rho)||_F <= 1e-6");
        Rng r2 = rng(0x42);
        for (const auto& entry : table) {
            const DensityMatrix rho = entry.sample_state(r2);
            const double t1 = r2.uniform(0.0, 3.0), t2 = r2.uniform(0.0, 3.0);
            const DensityMatrix once = hilbert_diffusion(entry.channel, rho, t1 + t2);
            const DensityMatrix twice =
                hilbert_diffusion(entry.channel, hilbert_diffusion(entry.channel, rho, t1), t2);
            semi.sample(max_abs(once.matrix() - twice.matrix()) - 1e-9, [&] {
                return Json{{"channel", entry.name}, {"t1", t1}, {"t2", t2}};
            });

            double prev = von_neumann_entropy(rho);
            for (int k = 1; k <= 20; ++k) {
                const double t = 10.0 * static_cast<double>(k) / 20.0;
                const double s = von_neumann_entropy(hilbert_diffusion(entry.channel, rho, t));
                dmono.sample(prev - s - 1e-9, [&] {
                    return Json{{"channel", entry.name}, {"t", t}, {"S", s}, {"Sprev", prev}};
                });
                prev = s;
            }

            const double dist = frobenius_norm(
                hilbert_diffusion(entry.channel, rho, 40.0).matrix() -
                entry.fixed_point(rho).matrix());
            conv.sample(dist - 1e-6,
                        [&] { return Json{{"channel", entry.name}, {"distance", dist}}; });
        }

        auto& nonlin = add("channels.nonlinearity-witness",
                           "product-of-marginals map violates additivity and is rejected "
                           "by the superoperator builder");
        {
            // Bell state mixed with an orthogonal product state: marginals of
            // the mixture differ from the mixture of marginal products.
            const DensityMatrix bell = DensityMatrix::bell_phi_plus();
            const DensityMatrix prod01 = DensityMatrix::computational_pure(4, 1, Bipartition{2, 2});
            const DensityMatrix mix(
                hermitian_part(0.5 * bell.matrix() + 0.5 * prod01.matrix()), Bipartition{2, 2});
            const ComplexMatrix averaged =
                0.5 * reduced_product(bell).matrix() + 0.5 * reduced_product(prod01).matrix();
            const double gap = max_abs(reduced_product(mix).matrix() - averaged);
            nonlin.sample(0.05 - gap, [&] { return Json{{"additivityGap", gap}}; });

            bool rejected = false;
            try {
                vectorize_superoperator(4, [](const ComplexMatrix& x) {
                    return tensor_product(partial_trace(x, 2, 2, Subsystem::A),
                                          partial_trace(x, 2, 2, Subsystem::B));
                });
            } catch (const Error& e) {
                rejected = e.kind() == ErrorKind::NonlinearAction;
            }
            nonlin.sample(rejected ? 0.0 : 1.0, "vectorize_superoperator rejection");
        }

        auto& attest = add("channels.attestation-rejects-nonmonotone",
                           "custom attestation marks an entropy-decreasing map non-monotone");
        {
            const SuperScattering sharpen = make_sharpening_channel(4);
            attest.sample(sharpen.is_monotone() ? 1.0 : 0.0, "attestation verdict");
            bool rejected = false;
            try {
                Rng rr = rng(0x43);
                hilbert_diffusion(sharpen, random_density_matrix(rr, 4), 1.0);
            } catch (const Error& e) {
                rejected = e.kind() == ErrorKind::NonMonotoneChannel;
            }
            attest.sample(rejected ? 0.0 : 1.0, "hilbert_diffusion rejection");
        }
    }

    /// Inverse of maximal mixing at s = 1/2: X -> 2X - tr(X) I/N. Linear and
    /// trace preserving but entropy *decreasing* on mixed states.
    static SuperScattering make_sharpening_channel(std::size_t n) {
        const double inv_n = 1.0 / static_cast<double>(n);
        return SuperScattering::custom(n, [n, inv_n](const ComplexMatrix& x) {
            return 2.0 * x - (trace(x) * inv_n) * ComplexMatrix::identity(n);
        });
    }

    void injected_fault_suite() {
        auto& tampered = add("channels.entropy-monotonicity[tampered]",
                             "S(apply(rho)) >= S(rho) - 1e-9");
        const SuperScattering honest = make_sharpening_channel(4);
        const SuperScattering forged = SuperScattering::unchecked_from_matrix(
            honest.super_matrix(), ChannelLabel::Custom, /*claimed_monotone=*/true);
        Rng r = rng(0x51);
        for (int i = 0; i < 20; ++i) {
            // mix toward I/N so the sharpened output stays a valid state
            const DensityMatrix raw = random_density_matrix(r, 4);
            const DensityMatrix rho = maximal_mix(raw, 0.5);
            const DensityMatrix out = apply(forged, rho);
            const double s_in = von_neumann_entropy(rho);
            const double s_out = von_neumann_entropy(out);
            tampered.sample(s_in - s_out - 1e-9, [&] {
                return Json{{"sample", i},
                            {"channel", "custom[forced monotone=true]"},
                            {"entropyBefore", s_in},
                            {"entropyAfter", s_out},
                            {"violatedInequality", "S(apply(rho)) >= S(rho) - 1e-9"}};
            });
        }
    }

    // -------------------------------------------------------------------- cli

    void cli_suite() {
        auto& det = add("cli.flow-determinism",
                        "identical seed produces byte-identical flow CSV");
        auto& round = add("cli.csv-roundtrip",
                          "re-parsed CSV rows revalidate against their bounds");
        const auto render = [this]() {
            Rng r = rng(0x61);
            const DensityMatrix rho = random_bipartite_density_matrix(r, 2, 2);
            const auto curve =
                entropy_flow_curve(FlowFamily::TuneablePartialTrace, rho, uniform_s_grid(11));
            CsvBuilder csv({"s", "entropy", "hidden_information", "lower_bound", "upper_bound",
                            "bounds_ok"});
            for (const auto& p : curve) {
                const bool ok = p.entropy >= p.lower_bound - 1e-9 &&
                                p.entropy <= p.upper_bound + 1e-9;
                csv.add_row({CsvBuilder::cell(p.s), CsvBuilder::cell(p.entropy),
                             CsvBuilder::cell(p.hidden_information),
                             CsvBuilder::cell(p.lower_bound), CsvBuilder::cell(p.upper_bound),
                             CsvBuilder::cell(ok)});
            }
            return csv.str();
        };
        const std::string first = render();
        const std::string second = render();
        det.sample(first == second ? 0.0 : 1.0, "byte comparison");

        std::istringstream in(first);
        std::string line;
        std::getline(in, line); // header
        std::size_t parsed = 0;
        double worst = -1.0;
        while (std::getline(in, line)) {
            std::array<double, 5> cell{};
            std::string flag;
            std::istringstream row(line);
            std::string tok;
            for (int c = 0; c < 5; ++c) {
                std::getline(row, tok, ',');
                cell[static_cast<std::size_t>(c)] = std::stod(tok);
            }
            std::getline(row, flag, ',');
            const double viol =
                std::max(cell[3] - cell[1] - 1e-9, cell[1] - cell[4] - 1e-9);
            worst = std::max(worst, viol);
            worst = std::max(worst, flag == "true" ? -1.0 : 1.0);
            ++parsed;
        }
        round.sample(parsed == 11 ? worst : 1.0, "parsed " + std::to_string(parsed) + " rows");
    }

    AuditOptions opt_;
    std::vector<Check> checks_;
};

inline Json run_audit(const AuditOptions& options) { return Audit(options).run(); }

} // namespace entropyflow
