#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "opdyn/bias.hpp"
#include "opdyn/dynamics.hpp"
#include "opdyn/generate.hpp"

namespace opdyn {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Builds a bias family from its config name and parameter map.
/// Family names and their parameters:
///   tanh-quadratic     chi, gamma
///   cubic-abs          chi, gamma
///   linear-symmetric   beta, gamma
///   hk-indicator       eps_lo, eps_hi, a
///   neg-tanh-quadratic chi, gamma
/// Unknown names, missing parameters and stray parameters are rejected.
inline BiasFamily make_family(const std::string& name,
                              const std::map<std::string, double>& params) {
    const auto take = [&params, &name](std::initializer_list<const char*> keys) {
        std::vector<double> vals;
        for (const char* k : keys) {
            auto it = params.find(k);
            if (it == params.end()) {
                throw ConfigError(name + ": missing parameter \"" + k + "\"");
            }
            vals.push_back(it->second);
        }
        if (params.size() != keys.size()) {
            for (const auto& [k, v] : params) {
                bool known = false;
                for (const char* want : keys) known = known || k == want;
                if (!known) throw ConfigError(name + ": unknown parameter \"" + k + "\"");
            }
        }
        return vals;
    };
    try {
        if (name == "tanh-quadratic") {
            auto v = take({"chi", "gamma"});
            return TanhQuadratic(v[0], v[1]);
        }
        if (name == "cubic-abs") {
            auto v = take({"chi", "gamma"});
            return CubicAbs(v[0], v[1]);
        }
        if (name == "linear-symmetric") {
            auto v = take({"beta", "gamma"});
            return LinearSymmetric(v[0], v[1]);
        }
        if (name == "hk-indicator") {
            auto v = take({"eps_lo", "eps_hi", "a"});
            return HKIndicator(v[0], v[1], v[2]);
        }
        if (name == "neg-tanh-quadratic") {
            auto v = take({"chi", "gamma"});
            return NegTanhQuadratic(v[0], v[1]);
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    throw ConfigError("unknown bias family \"" + name + "\"");
}

inline BiasFamily parse_family(const nlohmann::json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("family") || !j.contains("params")) {
        throw ConfigError(where + ": expected {\"family\": name, \"params\": {...}}");
    }
    std::map<std::string, double> params;
    for (const auto& [k, v] : j.at("params").items()) {
        if (!v.is_number()) throw ConfigError(where + ": parameter " + k + " must be a number");
        params[k] = v.get<double>();
    }
    return make_family(j.at("family").get<std::string>(), params);
}

/// A full simulation experiment parsed from one JSON document. See the
/// README for the schema; exactly one graph source and one x0 source.
struct ExperimentConfig {
    // graph source
    std::optional<std::string> edge_list_path;
    std::size_t n = 0;
    std::optional<GeneratorSpec> generator;

    ModelConfig model;

    // x0 source
    std::optional<std::vector<double>> x0_values;
    std::optional<std::uint64_t> x0_seed;

    std::size_t steps = 0;
    double conv_tol = 0.0;

    std::string csv_name = "trajectory.csv";
    std::string json_name = "trajectory.json";

    nlohmann::json echo;  // the parsed document, embedded in outputs
};

namespace detail {

// nlohmann's get<unsigned> silently wraps negative values; counts and
// seeds are read through these instead
inline std::size_t get_count(const nlohmann::json& j, const std::string& where) {
    if (!j.is_number_integer()) {
        throw ConfigError(where + ": expected a nonnegative integer");
    }
    if (!j.is_number_unsigned() && j.get<long long>() < 0) {
        throw ConfigError(where + ": must be >= 0");
    }
    return j.get<std::size_t>();
}

inline std::uint64_t get_seed(const nlohmann::json& j, const std::string& where) {
    if (!j.is_number_integer()) {
        throw ConfigError(where + ": expected an unsigned 64-bit seed");
    }
    if (!j.is_number_unsigned() && j.get<long long>() < 0) {
        throw ConfigError(where + ": seed must be >= 0");
    }
    return j.get<std::uint64_t>();
}

inline std::vector<double> broadcast_field(const nlohmann::json& j, std::size_t n,
                                           const std::string& where) {
    std::vector<double> out;
    if (j.is_number()) {
        out.assign(n, j.get<double>());
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (!v.is_number()) throw ConfigError(where + ": entries must be numbers");
            out.push_back(v.get<double>());
        }
        if (out.size() != n) {
            throw ConfigError(where + ": expected length " + std::to_string(n) +
                              ", got " + std::to_string(out.size()));
        }
    } else {
        throw ConfigError(where + ": expected a number or an array");
    }
    return out;
}

}  // namespace detail

inline ExperimentConfig parse_experiment_config(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ConfigError("config: top level must be an object");
    ExperimentConfig cfg;
    cfg.echo = doc;

    // --- graph source ---
    if (!doc.contains("graph") || !doc.at("graph").is_object()) {
        throw ConfigError("config: missing \"graph\" object");
    }
    const auto& graph = doc.at("graph");
    const bool has_edges = graph.contains("edge_list_path");
    const bool has_gen = graph.contains("generator");
    if (has_edges == has_gen) {
        throw ConfigError("config.graph: exactly one of edge_list_path or generator");
    }
    if (has_edges) {
        cfg.edge_list_path = graph.at("edge_list_path").get<std::string>();
        if (!graph.contains("n")) {
            throw ConfigError("config.graph: edge_list_path requires \"n\"");
        }
        cfg.n = detail::get_count(graph.at("n"), "config.graph.n");
        if (cfg.n == 0) throw ConfigError("config.graph: n must be >= 1");
    } else {
        const auto& gen = graph.at("generator");
        GeneratorSpec spec;
        try {
            spec.n = detail::get_count(gen.at("n"), "config.graph.generator.n");
            spec.edge_probability = gen.at("edge_probability").get<double>();
            const auto& range = gen.at("weight_range");
            if (!range.is_array() || range.size() != 2) {
                throw ConfigError("config.graph.generator: weight_range must be [lo, hi]");
            }
            spec.weight_lo = range.at(0).get<double>();
            spec.weight_hi = range.at(1).get<double>();
            spec.seed = detail::get_seed(gen.at("seed"), "config.graph.generator.seed");
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(std::string("config.graph.generator: ") + e.what());
        }
        try {
            spec.validate();
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        cfg.generator = spec;
        cfg.n = spec.n;
    }

    // --- model ---
    if (!doc.contains("model") || !doc.at("model").is_object()) {
        throw ConfigError("config: missing \"model\" object");
    }
    const auto& model = doc.at("model");
    for (const char* key : {"s", "beta", "conf", "neg"}) {
        if (!model.contains(key)) {
            throw ConfigError(std::string("config.model: missing \"") + key + "\"");
        }
    }
    cfg.model.s = detail::broadcast_field(model.at("s"), cfg.n, "config.model.s");
    cfg.model.beta = detail::broadcast_field(model.at("beta"), cfg.n, "config.model.beta");
    cfg.model.conf = parse_family(model.at("conf"), "config.model.conf");
    cfg.model.neg = parse_family(model.at("neg"), "config.model.neg");
    if (model.contains("norm")) {
        const auto& norm = model.at("norm");
        const std::string mode = norm.is_object() ? norm.value("mode", "") : "";
        if (mode == "strict") {
            cfg.model.norm = NormMode::strict();
        } else if (mode == "literal") {
            cfg.model.norm = NormMode::literal();
        } else if (mode == "rescale") {
            try {
                cfg.model.norm = NormMode::rescale(norm.value("alpha_target", 0.2));
            } catch (const std::invalid_argument& e) {
                throw ConfigError(e.what());
            }
        } else {
            throw ConfigError("config.model.norm.mode must be strict, rescale or literal");
        }
    }
    cfg.model.include_self = model.value("include_self", true);

    try {
        cfg.model.validate(cfg.n);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    // --- x0 source ---
    if (!doc.contains("x0") || !doc.at("x0").is_object()) {
        throw ConfigError("config: missing \"x0\" object");
    }
    const auto& x0 = doc.at("x0");
    const bool has_vals = x0.contains("values");
    const bool has_seed = x0.contains("random");
    if (has_vals == has_seed) {
        throw ConfigError("config.x0: exactly one of values or random");
    }
    if (has_vals) {
        cfg.x0_values = detail::broadcast_field(x0.at("values"), cfg.n, "config.x0.values");
        for (double v : *cfg.x0_values) {
            try {
                Opinion{v};
            } catch (const std::invalid_argument& e) {
                throw ConfigError(std::string("config.x0.values: ") + e.what());
            }
        }
    } else {
        if (!x0.at("random").is_object() || !x0.at("random").contains("seed")) {
            throw ConfigError("config.x0.random: requires \"seed\"");
        }
        cfg.x0_seed = detail::get_seed(x0.at("random").at("seed"), "config.x0.random.seed");
    }

    // --- run ---
    if (!doc.contains("run") || !doc.at("run").is_object() ||
        !doc.at("run").contains("K")) {
        throw ConfigError("config: missing \"run\" object with \"K\"");
    }
    cfg.steps = detail::get_count(doc.at("run").at("K"), "config.run.K");
    cfg.conv_tol = doc.at("run").value("conv_tol", 0.0);
    if (!(cfg.conv_tol >= 0.0)) throw ConfigError("config.run.conv_tol must be >= 0");

    // --- output ---
    if (doc.contains("output")) {
        const auto& out = doc.at("output");
        cfg.csv_name = out.value("csv", cfg.csv_name);
        cfg.json_name = out.value("json", cfg.json_name);
        cfg.model.record_weights = out.value("record_weights", false);
    }
    return cfg;
}

}  // namespace opdyn
