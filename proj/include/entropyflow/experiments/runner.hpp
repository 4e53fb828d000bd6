// Experiment runner: turns a validated config into a flow run, a CSV of
// per-record rows, and a JSON summary. Exit status 0 only when every
// bound-satisfied flag is true.

#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "entropyflow/experiments/audit.hpp"

namespace entropyflow {

struct RunResult {
    int exit_code = 0; // 0 ok, 3 numerical/invariant failure
    std::string csv;
    Json summary;
    std::filesystem::path csv_path;
    std::filesystem::path summary_path;
};

namespace run_detail {

struct Row {
    std::vector<double> numbers;
    bool ok = true;
};

struct Table {
    std::vector<std::string> columns; // numeric columns; a bounds_ok flag is appended
    std::vector<Row> rows;
    std::size_t entropy_column = 1;
    std::size_t monotone_column = 1; // column checked for non-decrease
    double monotone_tolerance = 1e-9;
};

inline ExperimentKind kind_of(const ExperimentConfig& cfg) { return cfg.kind; }

inline void reject_unknown(const Json& obj, const std::set<std::string>& allowed,
                           const std::string& where) {
    detail::reject_unknown_keys(obj, allowed, where);
}

template <typename T>
T required(const Json& obj, const std::string& key, const std::string& where) {
    return detail::get_required<T>(obj, key, where);
}

// ------------------------------------------------------------ initial states

inline GridDensity grid_from_config(const Json& state, std::uint64_t seed) {
    require(state.is_object() && state.contains("grid"), ErrorKind::ConfigError,
            "initialState.grid required for classical experiments");
    const Json& g = state.at("grid");
    reject_unknown(g, {"generator", "cells", "spacing", "rhoStar", "center", "width"},
                   "initialState.grid");
    const std::string generator = required<std::string>(g, "generator", "grid");
    const std::vector<std::size_t> cells =
        required<std::vector<std::size_t>>(g, "cells", "grid");
    require(!cells.empty() && cells.size() <= 3, ErrorKind::ConfigError,
            "grid.cells must have 1 to 3 axes");

    std::vector<double> spacing;
    if (g.contains("spacing")) {
        spacing = g.at("spacing").get<std::vector<double>>();
        require(spacing.size() == cells.size(), ErrorKind::ConfigError,
                "grid.spacing must match grid.cells");
    } else {
        for (std::size_t n : cells) spacing.push_back(1.0 / static_cast<double>(n));
    }
    const double rho_star = g.value("rhoStar", 1.0);

    std::size_t total = 1;
    for (std::size_t n : cells) total *= n;
    double vol = 1.0;
    for (double h : spacing) vol *= h;

    std::vector<double> values(total, 0.0);
    if (generator == "uniform") {
        for (double& v : values) v = 1.0 / (vol * static_cast<double>(total));
    } else if (generator == "spike") {
        std::size_t center = 0;
        const auto strides = [&] {
            std::vector<std::size_t> s(cells.size(), 1);
            for (std::size_t a = cells.size(); a-- > 1;) s[a - 1] = s[a] * cells[a];
            return s;
        }();
        for (std::size_t a = 0; a < cells.size(); ++a) center += (cells[a] / 2) * strides[a];
        values[center] = 1.0 / vol;
    } else if (generator == "linearRamp") {
        require(cells.size() == 1, ErrorKind::ConfigError, "linearRamp is one-dimensional");
        double mass = 0.0;
        for (std::size_t i = 0; i < total; ++i) {
            values[i] = (static_cast<double>(i) + 0.5) * spacing[0];
            mass += values[i] * vol;
        }
        for (double& v : values) v /= mass;
    } else if (generator == "gaussian") {
        require(cells.size() == 1, ErrorKind::ConfigError, "gaussian is one-dimensional");
        const double center = g.value("center", 0.5) * spacing[0] * static_cast<double>(total);
        const double width = g.value("width", 0.1) * spacing[0] * static_cast<double>(total);
        double mass = 0.0;
        for (std::size_t i = 0; i < total; ++i) {
            const double x = (static_cast<double>(i) + 0.5) * spacing[0];
            values[i] = std::exp(-0.5 * (x - center) * (x - center) / (width * width));
            mass += values[i] * vol;
        }
        for (double& v : values) v /= mass;
    } else if (generator == "randomSeeded") {
        Rng rng(seed);
        return random_grid_density(rng, cells, spacing).with_rho_star(rho_star);
    } else {
        fail(ErrorKind::ConfigError, "unknown grid generator '" + generator + "'");
    }
    return GridDensity(cells, spacing, values, rho_star);
}

inline ProbabilityVector probabilities_from_config(const Json& state, std::uint64_t seed) {
    if (state.contains("probabilityVector"))
        return ProbabilityVector(state.at("probabilityVector").get<std::vector<double>>());
    if (state.contains("uniform")) return ProbabilityVector::uniform(state.at("uniform"));
    if (state.contains("randomSeeded")) {
        Rng rng(seed);
        return random_probability_vector(rng, state.at("randomSeeded"));
    }
    fail(ErrorKind::ConfigError,
         "initialState needs probabilityVector, uniform or randomSeeded");
}

inline DensityMatrix density_matrix_from_config(const Json& state, std::uint64_t seed) {
    require(state.is_object() && state.contains("densityMatrix"), ErrorKind::ConfigError,
            "initialState.densityMatrix required for quantum experiments");
    const Json& d = state.at("densityMatrix");
    reject_unknown(d, {"named", "dim", "index", "bipartition", "matrix"},
                   "initialState.densityMatrix");

    std::optional<Bipartition> bip;
    if (d.contains("bipartition")) {
        const auto v = d.at("bipartition").get<std::vector<std::size_t>>();
        require(v.size() == 2, ErrorKind::ConfigError, "bipartition must be [dimA, dimB]");
        bip = Bipartition{v[0], v[1]};
    }

    if (d.contains("matrix")) {
        const Json& m = d.at("matrix");
        require(m.is_array() && !m.empty(), ErrorKind::ConfigError, "matrix must be non-empty");
        const std::size_t n = m.size();
        ComplexMatrix mat(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            require(m.at(r).is_array() && m.at(r).size() == n, ErrorKind::ConfigError,
                    "matrix must be square");
            for (std::size_t c = 0; c < n; ++c) {
                const Json& cell = m.at(r).at(c);
                if (cell.is_array()) {
                    require(cell.size() == 2, ErrorKind::ConfigError,
                            "complex entries are [re, im]");
                    mat(r, c) = Complex{cell.at(0).get<double>(), cell.at(1).get<double>()};
                } else {
                    mat(r, c) = Complex{cell.get<double>(), 0.0};
                }
            }
        }
        try {
            return DensityMatrix(mat, bip);
        } catch (const Error& e) {
            fail(ErrorKind::ConfigError, std::string("matrix literal: ") + e.what());
        }
    }

    const std::string named = required<std::string>(d, "named", "densityMatrix");
    if (named == "bell") return DensityMatrix::bell_phi_plus();
    const std::size_t dim = required<std::size_t>(d, "dim", "densityMatrix");
    if (named == "pure")
        return DensityMatrix::computational_pure(dim, d.value("index", std::size_t{0}), bip);
    if (named == "maximallyMixed") return DensityMatrix::maximally_mixed(dim, bip);
    if (named == "randomSeeded") {
        Rng rng(seed);
        return random_density_matrix(rng, dim, bip);
    }
    fail(ErrorKind::ConfigError, "unknown named state '" + named + "'");
}

// ------------------------------------------------------------------- tables

inline std::vector<double> time_grid_from_params(const Json& params) {
    if (params.contains("tGrid")) {
        const auto grid = params.at("tGrid").get<std::vector<double>>();
        require(!grid.empty(), ErrorKind::ConfigError, "tGrid must be non-empty");
        for (std::size_t i = 0; i < grid.size(); ++i) {
            require(grid[i] >= 0.0, ErrorKind::ConfigError, "tGrid values must be >= 0");
            require(i == 0 || grid[i] >= grid[i - 1], ErrorKind::ConfigError,
                    "tGrid must be ascending");
        }
        return grid;
    }
    const double t_max = params.value("tMax", 10.0);
    const std::size_t points = params.value("tPoints", std::size_t{20});
    require(t_max > 0.0 && points >= 2, ErrorKind::ConfigError,
            "tMax must be positive and tPoints >= 2");
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i)
        grid[i] = t_max * static_cast<double>(i) / static_cast<double>(points - 1);
    return grid;
}

inline double stable_step(const GridDensity& rho, double sigma, double fraction) {
    double coeff = 0.0;
    for (double h : rho.spacing()) coeff += 2.0 / (h * h);
    return fraction / (sigma * coeff);
}

inline Table classical_diffusion_table(const ExperimentConfig& cfg) {
    reject_unknown(cfg.parameters, {"sigma", "step", "steps", "stepFraction"}, "parameters");
    const double sigma = cfg.parameters.value("sigma", 1.0);
    const std::size_t steps = required<std::size_t>(cfg.parameters, "steps", "parameters");
    GridDensity rho = grid_from_config(cfg.initial_state, cfg.seed);
    const double step = cfg.parameters.contains("step")
                            ? cfg.parameters.at("step").get<double>()
                            : stable_step(rho, sigma, cfg.parameters.value("stepFraction", 0.98));
    const DiffusionSpec spec = DiffusionSpec::simple(sigma, step);

    const double upper = std::log(rho.total_volume() * rho.rho_star());
    Table table;
    table.columns = {"t",           "entropy",     "entropy_rate", "hidden_information",
                     "lower_bound", "upper_bound"};
    table.entropy_column = 1;
    table.monotone_column = 1;
    table.monotone_tolerance = 1e-12;

    const double s0 = continuum_entropy(rho);
    double prev = s0;
    for (std::size_t k = 0; k <= steps; ++k) {
        const double t = static_cast<double>(k) * step;
        const double s = continuum_entropy(rho);
        const double rate = diffusion_entropy_rate(rho, spec);
        Row row;
        row.numbers = {t, s, rate, s - s0, prev - table.monotone_tolerance, upper};
        row.ok = s >= prev - table.monotone_tolerance && s <= upper + 1e-9;
        table.rows.push_back(row);
        prev = s;
        if (k < steps) rho = diffusion_step(rho, spec);
    }
    return table;
}

inline Table classical_box_flow_table(const ExperimentConfig& cfg) {
    reject_unknown(cfg.parameters, {"sigma", "step", "steps", "stepFraction", "boxes"},
                   "parameters");
    const double sigma = cfg.parameters.value("sigma", 1.0);
    const std::size_t steps = required<std::size_t>(cfg.parameters, "steps", "parameters");
    GridDensity rho = grid_from_config(cfg.initial_state, cfg.seed);
    const double step = cfg.parameters.contains("step")
                            ? cfg.parameters.at("step").get<double>()
                            : stable_step(rho, sigma, cfg.parameters.value("stepFraction", 0.98));
    const std::size_t boxes = required<std::size_t>(cfg.parameters, "boxes", "parameters");
    const BoxPartition part = BoxPartition::equal_slabs(rho, boxes);
    const DiffusionSpec spec = DiffusionSpec::simple(sigma, step);

    const auto records = classical_flow(rho, spec, part, steps);
    Table table;
    table.columns = {"t",
                     "s_continuum",
                     "s_boxes",
                     "s_boxed_density",
                     "geometric_mean_volume",
                     "hidden_information",
                     "lower_bound",
                     "upper_bound"};
    table.entropy_column = 3; // S(rho_B_t), the monotone series
    table.monotone_column = 3;
    const double upper = std::log(rho.total_volume() * rho.rho_star());
    double prev = records.front().s_boxed_density;
    for (const auto& rec : records) {
        Row row;
        row.numbers = {rec.t,
                       rec.s_continuum,
                       rec.s_boxes,
                       rec.s_boxed_density,
                       rec.geometric_mean_volume,
                       rec.hidden_information,
                       prev - 1e-9,
                       upper};
        row.ok = rec.s_boxed_density >= prev - 1e-9 && rec.hidden_information >= -1e-9 &&
                 rec.s_boxed_density >= rec.s_continuum - 1e-9;
        table.rows.push_back(row);
        prev = rec.s_boxed_density;
    }
    return table;
}

inline Table aggregation_table(const ExperimentConfig& cfg) {
    reject_unknown(cfg.parameters, {"mode", "lambda", "sweeps", "selection", "draws"},
                   "parameters");
    const std::string mode = cfg.parameters.value("mode", std::string("naive"));
    require(mode == "naive" || mode == "asymmetric", ErrorKind::ConfigError,
            "mode must be naive or asymmetric");
    const double lambda = cfg.parameters.value("lambda", 0.75);
    const std::size_t sweeps = required<std::size_t>(cfg.parameters, "sweeps", "parameters");
    const std::string selection = cfg.parameters.value("selection", std::string("allPairs"));
    require(selection == "allPairs" || selection == "randomPairs", ErrorKind::ConfigError,
            "selection must be allPairs or randomPairs");

    ProbabilityVector p = probabilities_from_config(cfg.initial_state, cfg.seed);
    const std::size_t n = p.size();
    require(n >= 2, ErrorKind::ConfigError, "aggregation needs at least two states");
    const std::size_t draws = cfg.parameters.value("draws", n);
    Rng rng(cfg.seed + 1);

    const double upper = std::log(static_cast<double>(n));
    Table table;
    table.columns = {"step", "entropy", "hidden_information", "lower_bound", "upper_bound"};
    table.monotone_tolerance = 1e-12;

    const double s0 = shannon_entropy(p);
    double prev = s0;
    Row first;
    first.numbers = {0.0, s0, 0.0, s0 - 1e-12, upper};
    first.ok = s0 <= upper + 1e-12;
    table.rows.push_back(first);

    auto aggregate_once = [&](std::size_t a, std::size_t b) {
        p = mode == "naive" ? aggregate_naive(p, a, b) : aggregate_asymmetric(p, a, b, lambda);
    };
    for (std::size_t sweep = 1; sweep <= sweeps; ++sweep) {
        if (selection == "allPairs") {
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a + 1; b < n; ++b) aggregate_once(a, b);
        } else {
            for (std::size_t d = 0; d < draws; ++d) {
                const std::size_t a = rng.index(n);
                std::size_t b = rng.index(n - 1);
                if (b >= a) ++b;
                aggregate_once(a, b);
            }
        }
        const double s = shannon_entropy(p);
        Row row;
        row.numbers = {static_cast<double>(sweep), s, s - s0, prev - 1e-12, upper};
        row.ok = s >= prev - 1e-12 && s <= upper + 1e-12;
        table.rows.push_back(row);
        prev = s;
    }
    return table;
}

inline Table quantum_family_table(const ExperimentConfig& cfg) {
    reject_unknown(cfg.parameters, {"family", "sPoints", "sGrid", "basis"}, "parameters");
    const std::string family_name = required<std::string>(cfg.parameters, "family", "parameters");
    FlowFamily family;
    if (family_name == "maximalMix") family = FlowFamily::MaximalMix;
    else if (family_name == "tuneablePartialTrace") family = FlowFamily::TuneablePartialTrace;
    else if (family_name == "tuneableAsymmetricMix") family = FlowFamily::TuneableAsymmetricMix;
    else if (family_name == "partialDecoherence") family = FlowFamily::PartialDecoherence;
    else fail(ErrorKind::ConfigError, "unknown family '" + family_name + "'");

    const DensityMatrix rho = density_matrix_from_config(cfg.initial_state, cfg.seed);
    std::vector<double> grid;
    if (cfg.parameters.contains("sGrid"))
        grid = cfg.parameters.at("sGrid").get<std::vector<double>>();
    else
        grid = uniform_s_grid(cfg.parameters.value("sPoints", std::size_t{21}));

    std::optional<ProjectorBasis> basis;
    const std::string basis_name = cfg.parameters.value("basis", std::string("computational"));
    if (basis_name == "computational") {
        basis = ProjectorBasis::computational(rho.dim());
    } else if (basis_name == "randomSeeded") {
        Rng rng(cfg.seed + 2);
        basis = random_projector_basis(rng, rho.dim());
    } else {
        fail(ErrorKind::ConfigError, "basis must be computational or randomSeeded");
    }

    const auto curve = entropy_flow_curve(family, rho, grid, &*basis);
    Table table;
    table.columns = {"s", "entropy", "hidden_information", "lower_bound", "upper_bound"};
    double prev = curve.front().entropy;
    for (const auto& pt : curve) {
        Row row;
        row.numbers = {pt.s, pt.entropy, pt.hidden_information, pt.lower_bound, pt.upper_bound};
        row.ok = pt.entropy >= pt.lower_bound - 1e-9 && pt.entropy <= pt.upper_bound + 1e-9 &&
                 pt.entropy >= prev - 1e-9;
        table.rows.push_back(row);
        prev = pt.entropy;
    }
    return table;
}

inline SuperScattering channel_from_config(const Json& params, std::size_t dim,
                                           std::uint64_t seed) {
    require(params.contains("channel"), ErrorKind::ConfigError, "parameters.channel required");
    const Json& c = params.at("channel");
    reject_unknown(c, {"label", "s", "bipartition", "basis", "unitaries", "count"},
                   "parameters.channel");
    const std::string label = required<std::string>(c, "label", "channel");
    if (label == "maximal") return SuperScattering::maximal(dim, c.value("s", 1.0));
    if (label == "partialMaximal" || label == "partialMaximalTuneable") {
        const auto bip = c.at("bipartition").get<std::vector<std::size_t>>();
        require(bip.size() == 2 && bip[0] * bip[1] == dim, ErrorKind::ConfigError,
                "channel.bipartition must factor the state dimension");
        if (label == "partialMaximal") return SuperScattering::partial_maximal(bip[0], bip[1]);
        return SuperScattering::partial_maximal_tuneable(bip[0], bip[1], c.value("s", 0.5));
    }
    if (label == "fullDecoherence" || label == "partialDecoherence") {
        ProjectorBasis basis = ProjectorBasis::computational(dim);
        if (c.value("basis", std::string("computational")) == "randomSeeded") {
            Rng rng(seed + 3);
            basis = random_projector_basis(rng, dim);
        }
        if (label == "fullDecoherence") return SuperScattering::full_decoherence(basis);
        return SuperScattering::partial_decoherence(basis, c.value("s", 0.5));
    }
    if (label == "incoherentSum") {
        const std::size_t count = c.value("count", std::size_t{3});
        require(count >= 1, ErrorKind::ConfigError, "channel.count must be >= 1");
        Rng rng(seed + 4);
        std::vector<ComplexMatrix> unitaries;
        for (std::size_t i = 0; i < count; ++i) unitaries.push_back(random_unitary(rng, dim));
        return SuperScattering::incoherent_sum_channel(
            UnitaryEnsemble(random_probability_vector(rng, count), std::move(unitaries)));
    }
    fail(ErrorKind::ConfigError, "unknown channel label '" + label + "'");
}

inline Table hilbert_diffusion_table(const ExperimentConfig& cfg) {
    reject_unknown(cfg.parameters, {"channel", "tGrid", "tMax", "tPoints"}, "parameters");
    const DensityMatrix rho = density_matrix_from_config(cfg.initial_state, cfg.seed);
    const SuperScattering channel = channel_from_config(cfg.parameters, rho.dim(), cfg.seed);
    const auto grid = time_grid_from_params(cfg.parameters);

    const double s0 = von_neumann_entropy(rho);
    const double upper = std::log(static_cast<double>(rho.dim()));
    Table table;
    table.columns = {"t", "entropy", "hidden_information", "lower_bound", "upper_bound"};
    double prev = s0;
    for (double t : grid) {
        const double s = von_neumann_entropy(hilbert_diffusion(channel, rho, t));
        Row row;
        row.numbers = {t, s, s - s0, prev - 1e-9, upper};
        row.ok = s >= prev - 1e-9 && s <= upper + 1e-9;
        table.rows.push_back(row);
        prev = s;
    }
    return table;
}

inline Table partial_trace_diffusion_table(const ExperimentConfig& cfg) {
    reject_unknown(cfg.parameters, {"tGrid", "tMax", "tPoints"}, "parameters");
    const DensityMatrix rho = density_matrix_from_config(cfg.initial_state, cfg.seed);
    rho.require_bipartition();
    const auto grid = time_grid_from_params(cfg.parameters);

    const double s0 = von_neumann_entropy(rho);
    const double mi = mutual_information(rho);
    const double upper = s0 + mi; // S_A + S_B
    Table table;
    table.columns = {"t",           "s_equivalent", "entropy",
                     "hidden_information", "lower_bound",  "upper_bound"};
    table.entropy_column = 2;
    table.monotone_column = 2;
    for (double t : grid) {
        const double s_eq = 1.0 - std::exp(-t);
        const double s = von_neumann_entropy(partial_trace_diffusion(rho, t));
        const double lower = s0 + s_eq * mi;
        Row row;
        row.numbers = {t, s_eq, s, s - s0, lower, upper};
        row.ok = s >= lower - 1e-9 && s <= upper + 1e-9;
        table.rows.push_back(row);
    }
    return table;
}

} // namespace run_detail

/// Column schema per kind, as printed by `describe`.
inline std::vector<std::string> experiment_columns(ExperimentKind kind) {
    switch (kind) {
    case ExperimentKind::ClassicalDiffusion:
        return {"t", "entropy", "entropy_rate", "hidden_information", "lower_bound",
                "upper_bound", "bounds_ok"};
    case ExperimentKind::ClassicalBoxFlow:
        return {"t", "s_continuum", "s_boxes", "s_boxed_density", "geometric_mean_volume",
                "hidden_information", "lower_bound", "upper_bound", "bounds_ok"};
    case ExperimentKind::AggregationSweep:
        return {"step", "entropy", "hidden_information", "lower_bound", "upper_bound",
                "bounds_ok"};
    case ExperimentKind::QuantumFamilyCurve:
        return {"s", "entropy", "hidden_information", "lower_bound", "upper_bound", "bounds_ok"};
    case ExperimentKind::HilbertDiffusion:
        return {"t", "entropy", "hidden_information", "lower_bound", "upper_bound", "bounds_ok"};
    case ExperimentKind::PartialTraceDiffusion:
        return {"t", "s_equivalent", "entropy", "hidden_information", "lower_bound",
                "upper_bound", "bounds_ok"};
    case ExperimentKind::AuditAll:
        return {"name", "passed", "samples", "worst_violation"};
    }
    return {};
}

inline RunResult run_experiment(const ExperimentConfig& cfg,
                                const std::filesystem::path& out_dir) {
    const auto start = std::chrono::steady_clock::now();
    RunResult result;

    if (cfg.kind == ExperimentKind::AuditAll) {
        run_detail::reject_unknown(cfg.parameters, {"maxDim", "injectFault"}, "parameters");
        AuditOptions options;
        options.seed = cfg.seed;
        options.max_dim = cfg.parameters.value("maxDim", std::size_t{16});
        options.inject_fault = cfg.parameters.value("injectFault", false);
        const Json report = run_audit(options);

        CsvBuilder csv({"name", "passed", "samples", "worst_violation"});
        for (const auto& check : report.at("checks"))
            csv.add_row({check.at("name").get<std::string>(),
                         CsvBuilder::cell(check.at("passed").get<bool>()),
                         CsvBuilder::cell(check.at("samples").get<std::size_t>()),
                         CsvBuilder::cell(check.at("worstViolation").get<double>())});
        result.csv = csv.str();

        const bool all = report.at("allPassed").get<bool>();
        result.summary = Json{{"version", 1},
                              {"kind", to_string(cfg.kind)},
                              {"config", cfg.echo()},
                              {"rows", report.at("checks").size()},
                              {"minEntropy", 0.0},
                              {"maxEntropy", 0.0},
                              {"monotone", true},
                              {"boundsHold", all},
                              {"audit", report}};
        result.exit_code = all ? 0 : 3;
    } else {
        run_detail::Table table;
        switch (cfg.kind) {
        case ExperimentKind::ClassicalDiffusion:
            table = run_detail::classical_diffusion_table(cfg);
            break;
        case ExperimentKind::ClassicalBoxFlow:
            table = run_detail::classical_box_flow_table(cfg);
            break;
        case ExperimentKind::AggregationSweep:
            table = run_detail::aggregation_table(cfg);
            break;
        case ExperimentKind::QuantumFamilyCurve:
            table = run_detail::quantum_family_table(cfg);
            break;
        case ExperimentKind::HilbertDiffusion:
            table = run_detail::hilbert_diffusion_table(cfg);
            break;
        case ExperimentKind::PartialTraceDiffusion:
            table = run_detail::partial_trace_diffusion_table(cfg);
            break;
        case ExperimentKind::AuditAll:
            break;
        }

        std::vector<std::string> header = table.columns;
        header.push_back("bounds_ok");
        CsvBuilder csv(header);
        bool bounds_hold = true;
        bool monotone = true;
        double min_entropy = std::numeric_limits<double>::infinity();
        double max_entropy = -std::numeric_limits<double>::infinity();
        Json first_violation;
        double prev_monotone = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            const auto& row = table.rows[i];
            std::vector<std::string> cells;
            for (double x : row.numbers) cells.push_back(CsvBuilder::cell(x));
            cells.push_back(CsvBuilder::cell(row.ok));
            csv.add_row(cells);

            const double s = row.numbers[table.entropy_column];
            min_entropy = std::min(min_entropy, s);
            max_entropy = std::max(max_entropy, s);
            const double m = row.numbers[table.monotone_column];
            if (m < prev_monotone - table.monotone_tolerance) monotone = false;
            prev_monotone = m;
            if (!row.ok && first_violation.is_null()) {
                first_violation = Json{{"row", i}};
                for (std::size_t c = 0; c < table.columns.size(); ++c)
                    first_violation[table.columns[c]] = row.numbers[c];
            }
            bounds_hold = bounds_hold && row.ok;
        }
        result.csv = csv.str();
        result.summary = Json{{"version", 1},
                              {"kind", to_string(cfg.kind)},
                              {"config", cfg.echo()},
                              {"rows", table.rows.size()},
                              {"minEntropy", min_entropy},
                              {"maxEntropy", max_entropy},
                              {"monotone", monotone},
                              {"boundsHold", bounds_hold}};
        if (!first_violation.is_null()) result.summary["firstViolation"] = first_violation;
        result.exit_code = (bounds_hold && monotone) ? 0 : 3;
    }

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.summary["wallTimeSeconds"] = wall;

    const std::string base = cfg.output.path;
    if (cfg.output.format == "csv" || cfg.output.format == "both") {
        result.csv_path = out_dir / (base + ".csv");
        write_file_atomic(result.csv_path, result.csv);
    }
    if (cfg.output.format == "json" || cfg.output.format == "both") {
        result.summary_path = out_dir / (base + ".summary.json");
        write_file_atomic(result.summary_path, result.summary.dump(2) + "\n");
    }
    return result;
}

} // namespace entropyflow
