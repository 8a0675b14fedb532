#pragma once

#include <cmath>
#include <cstddef>
#include <istream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "opdyn/types.hpp"

namespace opdyn {

/// Weighted digraph over n individuals. w(i, j) is the weight individual
/// v_i places on v_j when forming the sensed expectation of her
/// neighborhood. Immutable after construction; entries are nonnegative
/// and finite. Self-loops are permitted.
class InfluenceGraph {
public:
    explicit InfluenceGraph(std::size_t n)
        : n_(n), w_(n * n, 0.0) {
        if (n == 0) throw std::invalid_argument("InfluenceGraph: n must be >= 1");
    }

    InfluenceGraph(std::size_t n, std::vector<double> weights)
        : n_(n), w_(std::move(weights)) {
        if (n == 0) throw std::invalid_argument("InfluenceGraph: n must be >= 1");
        if (w_.size() != n * n) {
            throw std::invalid_argument("InfluenceGraph: weight matrix size mismatch");
        }
        for (double v : w_) {
            if (!std::isfinite(v) || v < 0.0) {
                throw std::invalid_argument(
                    "InfluenceGraph: weights must be finite and nonnegative");
            }
        }
    }

    std::size_t size() const { return n_; }
    double w(std::size_t i, std::size_t j) const { return w_[i * n_ + j]; }
    std::span<const double> row(std::size_t i) const {
        return {w_.data() + i * n_, n_};
    }

private:
    std::size_t n_;
    std::vector<double> w_;
};

/// Parses the edge-list text format: one "i j w" entry per line with
/// 0-based indices, '#' starting a comment line. Blank lines and CRLF
/// endings are accepted. Unlisted entries are zero. Throws EdgeListError
/// (with the 1-based line number) on a malformed line, an out-of-range
/// index, a negative or non-finite weight, or a duplicate (i, j) entry.
inline InfluenceGraph parse_edge_list(std::istream& in, std::size_t n) {
    if (n == 0) throw std::invalid_argument("parse_edge_list: n must be >= 1");
    std::vector<double> w(n * n, 0.0);
    std::vector<char> seen(n * n, 0);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;           // blank
        if (line[first] == '#') continue;                   // comment
        std::istringstream ls(line);
        long long i = 0, j = 0;
        double weight = 0.0;
        if (!(ls >> i >> j >> weight)) {
            throw EdgeListError(lineno, "malformed line: expected \"i j w\"");
        }
        std::string rest;
        if (ls >> rest) {
            throw EdgeListError(lineno, "malformed line: trailing content \"" + rest + "\"");
        }
        if (i < 0 || j < 0 || i >= static_cast<long long>(n) ||
            j >= static_cast<long long>(n)) {
            throw EdgeListError(lineno, "index out of range for n = " + std::to_string(n));
        }
        if (!std::isfinite(weight) || weight < 0.0) {
            throw EdgeListError(lineno, "weight must be finite and nonnegative");
        }
        const std::size_t at = static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j);
        if (seen[at]) {
            throw EdgeListError(lineno, "duplicate edge (" + std::to_string(i) + ", " +
                                            std::to_string(j) + ")");
        }
        seen[at] = 1;
        w[at] = weight;
    }
    return InfluenceGraph(n, std::move(w));
}

inline InfluenceGraph parse_edge_list(const std::string& text, std::size_t n) {
    std::istringstream in(text);
    return parse_edge_list(in, n);
}

/// Sensed expectation of individual i: the w-weighted mean of all
/// opinions. An individual whose row sums to zero senses her own
/// opinion (she has nobody to form an expectation from). Result is
/// clamped to [-1, 1] to absorb rounding at the domain boundary.
inline double sensed_expectation(const InfluenceGraph& g,
                                 std::span<const double> x, std::size_t i) {
    if (x.size() != g.size()) {
        throw std::invalid_argument("sensed_expectation: opinion vector length mismatch");
    }
    if (i >= g.size()) {
        throw std::invalid_argument("sensed_expectation: index out of range");
    }
    const auto row = g.row(i);
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j) {
        num += row[j] * x[j];
        den += row[j];
    }
    if (den == 0.0) return x[i];
    return clamp_unit(num / den);
}

inline Opinion sensed_expectation(const InfluenceGraph& g,
                                  std::span<const Opinion> x, std::size_t i) {
    std::vector<double> raw(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) raw[j] = x[j].value();
    return Opinion(sensed_expectation(g, std::span<const double>(raw), i));
}

}  // namespace opdyn
