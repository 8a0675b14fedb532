#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "opdyn/types.hpp"

namespace opdyn {

/// Scalar influence-weight families. Confirmation families give more
/// weight to nearby opinions on the same side of the spectrum;
/// negativity families give more weight to opinions far from the
/// sensed expectation. Families intended to serve as confirmation
/// weights are validated nonnegative over [-1,1]^2 at construction
/// (the minimum of each closed form sits at the domain corners), so a
/// simulation never has to diagnose a negative weight mid-run.

/// c(a, b) = chi - gamma * (tanh a - tanh b)^2
struct TanhQuadratic {
    double chi;
    double gamma;

    TanhQuadratic(double chi_, double gamma_) : chi(chi_), gamma(gamma_) {
        validate_params(chi, gamma, "TanhQuadratic");
        if (chi <= 0.0) throw std::invalid_argument("TanhQuadratic: chi must be > 0");
        const double span = 2.0 * std::tanh(1.0);
        if (chi - gamma * span * span < 0.0) {
            throw std::invalid_argument(
                "TanhQuadratic: negative at corners; need chi >= gamma*(2*tanh 1)^2");
        }
    }

    double operator()(double a, double b) const {
        const double d = std::tanh(a) - std::tanh(b);
        return chi - gamma * d * d;
    }

    static void validate_params(double chi, double gamma, const char* name) {
        if (!std::isfinite(chi) || !std::isfinite(gamma)) {
            throw std::invalid_argument(std::string(name) + ": parameters must be finite");
        }
        if (gamma < 0.0) {
            throw std::invalid_argument(std::string(name) + ": gamma must be >= 0");
        }
    }
};

/// c(a, b) = chi - gamma * |a^3 - b^3|
struct CubicAbs {
    double chi;
    double gamma;

    CubicAbs(double chi_, double gamma_) : chi(chi_), gamma(gamma_) {
        TanhQuadratic::validate_params(chi, gamma, "CubicAbs");
        if (chi <= 0.0) throw std::invalid_argument("CubicAbs: chi must be > 0");
        if (chi - 2.0 * gamma < 0.0) {
            throw std::invalid_argument("CubicAbs: negative at corners; need chi >= 2*gamma");
        }
    }

    double operator()(double a, double b) const {
        return chi - gamma * std::fabs(a * a * a - b * b * b);
    }
};

/// c(a, b) = beta - gamma * |a - b|, beta >= gamma >= 0. The symmetric
/// baseline: weight depends on the distance only, not on which side of
/// the spectrum the opinions lie.
struct LinearSymmetric {
    double beta;
    double gamma;

    LinearSymmetric(double beta_, double gamma_) : beta(beta_), gamma(gamma_) {
        if (!std::isfinite(beta) || !std::isfinite(gamma)) {
            throw std::invalid_argument("LinearSymmetric: parameters must be finite");
        }
        if (gamma < 0.0 || beta < gamma) {
            throw std::invalid_argument("LinearSymmetric: need beta >= gamma >= 0");
        }
    }

    double operator()(double a, double b) const {
        return beta - gamma * std::fabs(a - b);
    }
};

/// Bounded-confidence indicator: weight = a when
/// eps_lo <= x_i - x_j < eps_hi, else 0.
struct HKIndicator {
    double eps_lo;
    double eps_hi;
    double a;

    HKIndicator(double eps_lo_, double eps_hi_, double a_)
        : eps_lo(eps_lo_), eps_hi(eps_hi_), a(a_) {
        if (!std::isfinite(eps_lo) || !std::isfinite(eps_hi) || !std::isfinite(a)) {
            throw std::invalid_argument("HKIndicator: parameters must be finite");
        }
        if (!(eps_lo < 0.0)) throw std::invalid_argument("HKIndicator: eps_lo must be < 0");
        if (!(eps_hi > 0.0)) throw std::invalid_argument("HKIndicator: eps_hi must be > 0");
        if (!(a > 0.0)) throw std::invalid_argument("HKIndicator: a must be > 0");
    }

    double operator()(double x_i, double x_j) const {
        const double d = x_i - x_j;
        return (eps_lo <= d && d < eps_hi) ? a : 0.0;
    }
};

/// c(a, b) = chi + gamma * (tanh a - tanh b)^2: increasing in the
/// transformed distance, a negativity-bias family.
struct NegTanhQuadratic {
    double chi;
    double gamma;

    NegTanhQuadratic(double chi_, double gamma_) : chi(chi_), gamma(gamma_) {
        TanhQuadratic::validate_params(chi, gamma, "NegTanhQuadratic");
        if (chi < 0.0) throw std::invalid_argument("NegTanhQuadratic: chi must be >= 0");
    }

    double operator()(double a, double b) const {
        const double d = std::tanh(a) - std::tanh(b);
        return chi + gamma * d * d;
    }
};

/// User-supplied decomposition c(a, b) = g(|f(a) - f(b)|). No
/// construction-time nonnegativity check is possible for arbitrary f, g;
/// the condition checkers are the arbiter of whether a given pair
/// qualifies as a bias model.
struct Decomposed {
    std::function<double(double)> f;
    std::function<double(double)> g;

    double operator()(double a, double b) const {
        return g(std::fabs(f(a) - f(b)));
    }
};

/// monostate marks a not-yet-configured family; evaluating one is a
/// logic error.
using BiasFamily = std::variant<std::monostate, TanhQuadratic, CubicAbs,
                                LinearSymmetric, HKIndicator, NegTanhQuadratic,
                                Decomposed>;

/// Evaluates a family at (first, second). Pure; inputs expected in [-1, 1].
inline double eval(const BiasFamily& fam, double first, double second) {
    return std::visit(
        [&](const auto& f) -> double {
            if constexpr (std::is_same_v<std::decay_t<decltype(f)>, std::monostate>) {
                throw std::logic_error("eval: bias family not configured");
            } else {
                return f(first, second);
            }
        },
        fam);
}

/// Confirmation-bias weight c(x_i, x_j).
inline double eval_conf(const BiasFamily& fam, double x_i, double x_j) {
    return eval(fam, x_i, x_j);
}
inline double eval_conf(const BiasFamily& fam, Opinion x_i, Opinion x_j) {
    return eval(fam, x_i.value(), x_j.value());
}

/// Negativity-bias weight c̄(x̄_i, x_j), first argument the sensed expectation.
inline double eval_neg(const BiasFamily& fam, double xbar_i, double x_j) {
    return eval(fam, xbar_i, x_j);
}
inline double eval_neg(const BiasFamily& fam, Opinion xbar_i, Opinion x_j) {
    return eval(fam, xbar_i.value(), x_j.value());
}

/// beta-mixture of a confirmation family and a negativity family.
struct CompositeBias {
    double beta;       // mixing weight on the confirmation term, in [0, 1]
    BiasFamily conf;
    BiasFamily neg;

    CompositeBias(double beta_, BiasFamily conf_, BiasFamily neg_)
        : beta(beta_), conf(std::move(conf_)), neg(std::move(neg_)) {
        if (!std::isfinite(beta) || beta < 0.0 || beta > 1.0) {
            throw std::invalid_argument("CompositeBias: beta must be in [0, 1]");
        }
    }
};

/// (1 - beta) * c̄(x̄_i, x_j) + beta * c(x_i, x_j)
inline double composite_weight(const CompositeBias& cb, double x_i,
                               double xbar_i, double x_j) {
    if (cb.beta == 1.0) return eval_conf(cb.conf, x_i, x_j);
    if (cb.beta == 0.0) return eval_neg(cb.neg, xbar_i, x_j);
    return (1.0 - cb.beta) * eval_neg(cb.neg, xbar_i, x_j) +
           cb.beta * eval_conf(cb.conf, x_i, x_j);
}
inline double composite_weight(const CompositeBias& cb, Opinion x_i,
                               Opinion xbar_i, Opinion x_j) {
    return composite_weight(cb, x_i.value(), xbar_i.value(), x_j.value());
}

/// One update of the biased-assimilation baseline on the two-agent
/// network. Opinions live in [0, 1] here (that model's native domain).
///   x_i' = (w_ii x_i + x_i^b w_ij x_j)
///        / (w_ii + x_i^b w_ij x_j + (1-x_i)^b w_ij (1-x_j))
inline double eval_dandekar_step(double w_ii, double w_ij, double b_i,
                                 double x_i, double x_j) {
    if (!(w_ii > 0.0) || w_ij < 0.0 || b_i < 0.0) {
        throw std::invalid_argument("eval_dandekar_step: need w_ii > 0, w_ij >= 0, b >= 0");
    }
    if (x_i < 0.0 || x_i > 1.0 || x_j < 0.0 || x_j > 1.0) {
        throw std::invalid_argument("eval_dandekar_step: opinions must lie in [0, 1]");
    }
    const double up = std::pow(x_i, b_i);
    const double down = std::pow(1.0 - x_i, b_i);
    const double num = w_ii * x_i + up * w_ij * x_j;
    const double den = w_ii + up * w_ij * x_j + down * w_ij * (1.0 - x_j);
    if (den == 0.0) {
        throw std::domain_error("eval_dandekar_step: zero denominator");
    }
    return num / den;
}

/// The (f, g) decomposition of a closed-form family, when one exists.
/// The indicator family is not of the g(|f(a) - f(b)|) form.
inline std::optional<Decomposed> decomposition(const BiasFamily& fam) {
    struct Visitor {
        std::optional<Decomposed> operator()(const std::monostate&) const {
            return std::nullopt;
        }
        std::optional<Decomposed> operator()(const TanhQuadratic& t) const {
            return Decomposed{[](double x) { return std::tanh(x); },
                              [chi = t.chi, gamma = t.gamma](double d) {
                                  return chi - gamma * d * d;
                              }};
        }
        std::optional<Decomposed> operator()(const CubicAbs& t) const {
            return Decomposed{[](double x) { return x * x * x; },
                              [chi = t.chi, gamma = t.gamma](double d) {
                                  return chi - gamma * d;
                              }};
        }
        std::optional<Decomposed> operator()(const LinearSymmetric& t) const {
            return Decomposed{[](double x) { return x; },
                              [beta = t.beta, gamma = t.gamma](double d) {
                                  return beta - gamma * d;
                              }};
        }
        std::optional<Decomposed> operator()(const HKIndicator&) const {
            return std::nullopt;
        }
        std::optional<Decomposed> operator()(const NegTanhQuadratic& t) const {
            return Decomposed{[](double x) { return std::tanh(x); },
                              [chi = t.chi, gamma = t.gamma](double d) {
                                  return chi + gamma * d * d;
                              }};
        }
        std::optional<Decomposed> operator()(const Decomposed& t) const { return t; }
    };
    return std::visit(Visitor{}, fam);
}

}  // namespace opdyn
