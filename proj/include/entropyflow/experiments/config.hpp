// Experiment configuration: versioned JSON schema, parsed strictly.
// Unknown fields are rejected; reproducibility beats leniency.

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include <json.hpp>

#include "entropyflow/core/error.hpp"

namespace entropyflow {

using Json = nlohmann::ordered_json;

enum class ExperimentKind {
    ClassicalDiffusion,
    ClassicalBoxFlow,
    AggregationSweep,
    QuantumFamilyCurve,
    HilbertDiffusion,
    PartialTraceDiffusion,
    AuditAll,
};

inline const char* to_string(ExperimentKind kind) {
    switch (kind) {
    case ExperimentKind::ClassicalDiffusion: return "classicalDiffusion";
    case ExperimentKind::ClassicalBoxFlow: return "classicalBoxFlow";
    case ExperimentKind::AggregationSweep: return "aggregationSweep";
    case ExperimentKind::QuantumFamilyCurve: return "quantumFamilyCurve";
    case ExperimentKind::HilbertDiffusion: return "hilbertDiffusion";
    case ExperimentKind::PartialTraceDiffusion: return "partialTraceDiffusion";
    case ExperimentKind::AuditAll: return "auditAll";
    }
    return "unknown";
}

inline ExperimentKind experiment_kind_from_string(const std::string& s) {
    if (s == "classicalDiffusion") return ExperimentKind::ClassicalDiffusion;
    if (s == "classicalBoxFlow") return ExperimentKind::ClassicalBoxFlow;
    if (s == "aggregationSweep") return ExperimentKind::AggregationSweep;
    if (s == "quantumFamilyCurve") return ExperimentKind::QuantumFamilyCurve;
    if (s == "hilbertDiffusion") return ExperimentKind::HilbertDiffusion;
    if (s == "partialTraceDiffusion") return ExperimentKind::PartialTraceDiffusion;
    if (s == "auditAll") return ExperimentKind::AuditAll;
    fail(ErrorKind::ConfigError, "unknown experiment kind '" + s + "'");
}

namespace detail {

inline void reject_unknown_keys(const Json& obj, const std::set<std::string>& allowed,
                                const std::string& where) {
    for (const auto& item : obj.items())
        require(allowed.count(item.key()) > 0, ErrorKind::ConfigError,
                "unknown field '" + item.key() + "' in " + where);
}

template <typename T>
T get_required(const Json& obj, const std::string& key, const std::string& where) {
    require(obj.contains(key), ErrorKind::ConfigError,
            "missing field '" + key + "' in " + where);
    try {
        return obj.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ConfigError, "field '" + key + "' in " + where + ": " + e.what());
    }
}

} // namespace detail

struct OutputSpec {
    std::string path;   // base name; .csv / .summary.json are appended
    std::string format; // "csv" | "json" | "both"
};

struct ExperimentConfig {
    ExperimentKind kind;
    Json initial_state; // interpreted per kind by the runner
    Json parameters;    // interpreted per kind by the runner
    std::uint64_t seed; // always present, recorded for provenance
    OutputSpec output;

    static ExperimentConfig from_json(const Json& j) {
        require(j.is_object(), ErrorKind::ConfigError, "config must be a JSON object");
        detail::reject_unknown_keys(
            j, {"version", "kind", "initialState", "parameters", "seed", "output"}, "config");
        const int version = detail::get_required<int>(j, "version", "config");
        require(version == 1, ErrorKind::ConfigError,
                "unsupported config version " + std::to_string(version));

        ExperimentConfig cfg;
        cfg.kind = experiment_kind_from_string(
            detail::get_required<std::string>(j, "kind", "config"));
        cfg.initial_state = j.value("initialState", Json::object());
        cfg.parameters = j.value("parameters", Json::object());
        require(j.contains("seed"), ErrorKind::ConfigError, "missing field 'seed' in config");
        cfg.seed = detail::get_required<std::uint64_t>(j, "seed", "config");

        const Json out = j.value("output", Json::object());
        detail::reject_unknown_keys(out, {"path", "format"}, "output");
        cfg.output.path = out.value("path", std::string(to_string(cfg.kind)));
        cfg.output.format = out.value("format", std::string("both"));
        require(cfg.output.format == "csv" || cfg.output.format == "json" ||
                    cfg.output.format == "both",
                ErrorKind::ConfigError, "output.format must be csv, json or both");
        return cfg;
    }

    static ExperimentConfig load(const std::filesystem::path& path) {
        std::ifstream in(path);
        require(in.good(), ErrorKind::ConfigError, "cannot open config " + path.string());
        Json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            fail(ErrorKind::ConfigError, "config " + path.string() + " is not valid JSON: " +
                                             e.what());
        }
        return from_json(j);
    }

    Json echo() const {
        Json j;
        j["version"] = 1;
        j["kind"] = to_string(kind);
        j["initialState"] = initial_state;
        j["parameters"] = parameters;
        j["seed"] = seed;
        j["output"] = Json{{"path", output.path}, {"format", output.format}};
        return j;
    }
};

} // namespace entropyflow
