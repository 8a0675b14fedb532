#pragma once

#include <cstdio>
#include <string>

#include "json.hpp"

#include "opdyn/bias.hpp"
#include "opdyn/dynamics.hpp"
#include "opdyn/grid.hpp"

namespace opdyn {

/// 17 significant digits: enough for lossless double round-trips, so
/// identical runs serialize byte-identically.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Trajectory CSV: header `k,x_0..x_{n-1},alpha_0..alpha_{n-1}`, one row
/// per recorded state. The alpha columns of row k hold the resistance
/// parameters used to produce state k; they are empty on the k = 0 row.
/// LF line endings.
inline std::string trajectory_csv(const Trajectory& traj) {
    std::string out = "k";
    for (std::size_t i = 0; i < traj.n; ++i) out += ",x_" + std::to_string(i);
    for (std::size_t i = 0; i < traj.n; ++i) out += ",alpha_" + std::to_string(i);
    out += "\n";
    for (std::size_t k = 0; k < traj.states.size(); ++k) {
        out += std::to_string(k);
        for (double v : traj.states[k]) {
            out += ",";
            out += format_double(v);
        }
        for (std::size_t i = 0; i < traj.n; ++i) {
            out += ",";
            if (k > 0) out += format_double(traj.alphas[k - 1][i]);
        }
        out += "\n";
    }
    return out;
}

/// Trajectory JSON: config echo plus the full state/alpha history.
inline nlohmann::json trajectory_json(const Trajectory& traj,
                                      const nlohmann::json& config_echo) {
    nlohmann::json j;
    j["config"] = config_echo;
    j["n"] = traj.n;
    j["states"] = traj.states;
    j["alphas"] = traj.alphas;
    if (!traj.weights.empty()) j["weights"] = traj.weights;
    if (traj.converged_at) {
        j["converged_at"] = *traj.converged_at;
    } else {
        j["converged_at"] = nullptr;
    }
    return j;
}

/// Weight surface over [-1, 1]^2 in row-major order (x_i outer).
/// Header `x_i,x_j,c`; resolution points per axis including endpoints.
inline std::string surface_csv(const BiasFamily& fam, std::size_t resolution) {
    const std::vector<double> pts = surface_points(resolution);
    std::string out = "x_i,x_j,c\n";
    for (double xi : pts) {
        for (double xj : pts) {
            out += format_double(xi);
            out += ",";
            out += format_double(xj);
            out += ",";
            out += format_double(eval(fam, xi, xj));
            out += "\n";
        }
    }
    return out;
}

}  // namespace opdyn
