#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "opdyn/graph.hpp"
#include "opdyn/rng.hpp"

namespace opdyn {

/// Random-instance recipe. Generation order is part of the contract
/// (see README): ordered pairs (i, j) row-major with i != j; one
/// uniform draw decides edge presence, a second (consumed only when the
/// edge exists) its weight.
struct GeneratorSpec {
    std::size_t n = 0;
    double edge_probability = 0.0;
    double weight_lo = 1.0;
    double weight_hi = 1.0;
    std::uint64_t seed = 0;

    void validate() const {
        if (n == 0) throw std::invalid_argument("GeneratorSpec: n must be >= 1");
        if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
            throw std::invalid_argument("GeneratorSpec: edge_probability must be in [0, 1]");
        }
        if (!(weight_lo > 0.0) || !(weight_hi >= weight_lo) || !std::isfinite(weight_hi)) {
            throw std::invalid_argument(
                "GeneratorSpec: weight range must satisfy 0 < lo <= hi < inf");
        }
    }
};

inline InfluenceGraph generate_graph(const GeneratorSpec& spec) {
    spec.validate();
    SplitMix64 rng(spec.seed);
    std::vector<double> w(spec.n * spec.n, 0.0);
    for (std::size_t i = 0; i < spec.n; ++i) {
        for (std::size_t j = 0; j < spec.n; ++j) {
            if (i == j) continue;
            const double u = rng.u01();
            if (u < spec.edge_probability) {
                const double uw = rng.u01();
                w[i * spec.n + j] = spec.weight_lo + (spec.weight_hi - spec.weight_lo) * uw;
            }
        }
    }
    return InfluenceGraph(spec.n, std::move(w));
}

/// Initial opinions uniform over [-1, 1), one draw per individual.
inline std::vector<double> generate_x0(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = -1.0 + 2.0 * rng.u01();
    return x;
}

}  // namespace opdyn
