#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "opdyn/bias.hpp"
#include "opdyn/graph.hpp"
#include "opdyn/types.hpp"

namespace opdyn {

/// Row-normalization policy for the per-step weight matrix.
///   strict:  keep the raw weights; the resistance parameter absorbs the
///            remainder (error when a row sums above 1).
///   rescale: scale each nonzero row to sum to 1 - alpha_target (keeps
///            the relative bias ordering; always feasible).
///   literal: diagnostic mode reproducing the printed normalization
///            constraint verbatim; neighbor opinions then influence an
///            update only through the resistance parameter and states
///            carry no bound guarantee.
struct NormMode {
    enum class Kind { Strict, Rescale, Literal };

    Kind kind = Kind::Rescale;
    double alpha_target = 0.2;

    static NormMode strict() { return {Kind::Strict, 0.0}; }
    static NormMode rescale(double alpha_target) {
        NormMode m{Kind::Rescale, alpha_target};
        m.validate();
        return m;
    }
    static NormMode literal() { return {Kind::Literal, 0.0}; }

    void validate() const {
        if (kind == Kind::Rescale &&
            (!std::isfinite(alpha_target) || alpha_target < 0.0 || alpha_target >= 1.0)) {
            throw std::invalid_argument("NormMode: rescale alpha_target must be in [0, 1)");
        }
    }
};

/// Per-run model parameters: subconscious biases s, mixing weights beta,
/// the two bias families, and the normalization mode. include_self
/// controls whether the j = i term participates in the update sum.
struct ModelConfig {
    std::vector<double> s;
    std::vector<double> beta;
    BiasFamily conf;
    BiasFamily neg;
    NormMode norm;
    bool include_self = true;
    bool record_weights = false;

    void validate(std::size_t n) const {
        if (s.size() != n || beta.size() != n) {
            throw std::invalid_argument("ModelConfig: s and beta must have length n");
        }
        for (double v : s) Opinion{v};  // finite, in [-1, 1]
        for (double b : beta) {
            if (!std::isfinite(b) || b < 0.0 || b > 1.0) {
                throw std::invalid_argument("ModelConfig: beta entries must be in [0, 1]");
            }
        }
        norm.validate();
    }
};

struct SimulationState {
    std::vector<double> x;
    std::size_t k = 0;
};

/// Recorded run: states for k = 0..K', the resistance parameters of each
/// executed step (so states.size() == alphas.size() + 1), optionally the
/// normalized weight rows per step, and the first step at which the
/// max-norm state difference fell within the convergence tolerance.
struct Trajectory {
    std::size_t n = 0;
    std::vector<std::vector<double>> states;
    std::vector<std::vector<double>> alphas;
    std::vector<std::vector<double>> weights;  // n*n row-major per step, optional
    std::optional<std::size_t> converged_at;
};

/// State-dependent weight matrix: entry (i, j) mixes the negativity
/// weight against i's sensed expectation with the confirmation weight
/// against i's own opinion. The expectation is not evaluated when
/// beta_i = 1 (mixture collapse).
inline std::vector<double> compute_weight_matrix(const ModelConfig& cfg,
                                                 const InfluenceGraph& g,
                                                 std::span<const double> x) {
    const std::size_t n = g.size();
    if (x.size() != n) {
        throw std::invalid_argument("compute_weight_matrix: opinion vector length mismatch");
    }
    cfg.validate(n);
    std::vector<double> W(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double bi = cfg.beta[i];
        const double xbar = (bi < 1.0) ? sensed_expectation(g, x, i) : 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!cfg.include_self && j == i) continue;
            double w = 0.0;
            if (bi > 0.0) w += bi * eval_conf(cfg.conf, x[i], x[j]);
            if (bi < 1.0) w += (1.0 - bi) * eval_neg(cfg.neg, xbar, x[j]);
            W[i * n + j] = w;
        }
    }
    return W;
}

/// Normalizes one weight row, returning the resistance parameter and the
/// row actually used in the update. Literal mode needs the current
/// opinions (its resistance parameter is opinion-dependent).
inline std::pair<double, std::vector<double>> normalize_row(
    std::span<const double> row, const NormMode& mode,
    std::span<const double> x_for_literal = {}, std::size_t row_index = 0) {
    mode.validate();
    std::vector<double> out(row.begin(), row.end());
    double sum = 0.0;
    for (double v : row) {
        if (v < 0.0 || !std::isfinite(v)) {
            throw std::invalid_argument("normalize_row: entries must be finite and >= 0");
        }
        sum += v;
    }
    switch (mode.kind) {
        case NormMode::Kind::Strict: {
            const double alpha = 1.0 - sum;
            if (alpha < 0.0 || alpha > 1.0) {
                throw InfeasibleNormalization(row_index, sum);
            }
            return {alpha, std::move(out)};
        }
        case NormMode::Kind::Rescale: {
            if (sum == 0.0) return {1.0, std::move(out)};
            const double lambda = (1.0 - mode.alpha_target) / sum;
            for (double& v : out) v *= lambda;
            return {mode.alpha_target, std::move(out)};
        }
        case NormMode::Kind::Literal: {
            if (x_for_literal.size() != row.size()) {
                throw std::logic_error(
                    "normalize_row: literal mode needs the current opinion vector");
            }
            double t = 0.0;
            for (std::size_t j = 0; j < row.size(); ++j) t += row[j] * x_for_literal[j];
            return {1.0 - t, std::move(out)};
        }
    }
    throw std::logic_error("normalize_row: unreachable");
}

namespace detail {

struct StepRecord {
    SimulationState state;
    std::vector<double> alphas;
    std::vector<double> rows;  // n*n row-major, the rows used in the update
};

inline StepRecord step_full(const ModelConfig& cfg, const InfluenceGraph& g,
                            const SimulationState& st) {
    const std::size_t n = g.size();
    if (st.x.size() != n) {
        throw std::invalid_argument("step: state length mismatch");
    }
    const std::vector<double> W = compute_weight_matrix(cfg, g, st.x);
    StepRecord rec;
    rec.state.x.resize(n);
    rec.state.k = st.k + 1;
    rec.alphas.resize(n);
    rec.rows.resize(n * n);

    for (std::size_t i = 0; i < n; ++i) {
        const std::span<const double> row(W.data() + i * n, n);
        if (cfg.norm.kind == NormMode::Kind::Literal) {
            double t = 0.0;
            for (std::size_t j = 0; j < n; ++j) t += row[j] * st.x[j];
            const double alpha = 1.0 - t;
            rec.alphas[i] = alpha;
            std::copy(row.begin(), row.end(), rec.rows.begin() + i * n);
            rec.state.x[i] = alpha * cfg.s[i] + t;
        } else {
            auto [alpha, scaled] = [&] {
                try {
                    return normalize_row(row, cfg.norm, {}, i);
                } catch (const InfeasibleNormalization& e) {
                    throw InfeasibleNormalization(e.row(), e.row_sum(), st.k);
                }
            }();
            rec.alphas[i] = alpha;
            // x_i' = s_i + sum_j w_ij (x_j - s_i): algebraically the convex
            // combination alpha s_i + sum_j w_ij x_j, but exact at the
            // consensus fixed point.
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) acc += scaled[j] * (st.x[j] - cfg.s[i]);
            rec.state.x[i] = clamp_unit(cfg.s[i] + acc);
            std::copy(scaled.begin(), scaled.end(), rec.rows.begin() + i * n);
        }
    }
    return rec;
}

}  // namespace detail

/// One update of every individual's opinion.
inline SimulationState step(const ModelConfig& cfg, const InfluenceGraph& g,
                            const SimulationState& st) {
    return detail::step_full(cfg, g, st).state;
}

/// Runs up to K steps from x0, recording states and resistance
/// parameters. Stops early once the max-norm step difference is within
/// conv_tol, recording that step index as converged_at.
inline Trajectory run(const ModelConfig& cfg, const InfluenceGraph& g,
                      std::vector<double> x0, std::size_t K, double conv_tol) {
    const std::size_t n = g.size();
    cfg.validate(n);
    if (x0.size() != n) {
        throw std::invalid_argument("run: x0 must have length n");
    }
    for (double v : x0) Opinion{v};
    if (!(conv_tol >= 0.0)) {
        throw std::invalid_argument("run: conv_tol must be >= 0");
    }

    Trajectory traj;
    traj.n = n;
    traj.states.push_back(std::move(x0));

    SimulationState st{traj.states.front(), 0};
    for (std::size_t k = 0; k < K; ++k) {
        detail::StepRecord rec = detail::step_full(cfg, g, st);
        double delta = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            delta = std::max(delta, std::fabs(rec.state.x[i] - st.x[i]));
        }
        traj.states.push_back(rec.state.x);
        traj.alphas.push_back(std::move(rec.alphas));
        if (cfg.record_weights) traj.weights.push_back(std::move(rec.rows));
        st = std::move(rec.state);
        if (delta <= conv_tol) {
            traj.converged_at = k;
            break;
        }
    }
    return traj;
}

}  // namespace opdyn
