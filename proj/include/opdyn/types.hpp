#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace opdyn {

/// A scalar opinion on the spectrum [-1, 1]. -1 and +1 are the two
/// extreme positions on the topic under discussion; 0 is neutral.
/// Construction rejects non-finite or out-of-range values.
class Opinion {
public:
    Opinion() = default;

    explicit Opinion(double v) : value_(v) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("Opinion: value must be finite");
        }
        if (v < -1.0 || v > 1.0) {
            throw std::invalid_argument("Opinion: value " + std::to_string(v) +
                                        " outside [-1, 1]");
        }
    }

    double value() const { return value_; }

private:
    double value_ = 0.0;
};

/// Error raised while parsing an edge-list stream; carries the 1-based
/// line number of the offending line.
class EdgeListError : public std::runtime_error {
public:
    EdgeListError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Raised in strict normalization mode when a weight row sums above 1,
/// leaving no room for a nonnegative resistance parameter.
class InfeasibleNormalization : public std::runtime_error {
public:
    InfeasibleNormalization(std::size_t row, double row_sum)
        : std::runtime_error("strict normalization infeasible at row " +
                             std::to_string(row) + ": weight sum " +
                             std::to_string(row_sum) + " exceeds 1"),
          row_(row), row_sum_(row_sum) {}

    InfeasibleNormalization(std::size_t row, double row_sum, std::size_t step)
        : std::runtime_error("strict normalization infeasible at step " +
                             std::to_string(step) + ", row " +
                             std::to_string(row) + ": weight sum " +
                             std::to_string(row_sum) + " exceeds 1"),
          row_(row), row_sum_(row_sum), step_(step) {}

    std::size_t row() const { return row_; }
    double row_sum() const { return row_sum_; }
    std::size_t step() const { return step_; }

private:
    std::size_t row_;
    double row_sum_;
    std::size_t step_ = 0;
};

inline double clamp_unit(double v) {
    if (v < -1.0) return -1.0;
    if (v > 1.0) return 1.0;
    return v;
}

}  // namespace opdyn
