#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace opdyn {

/// Sampling grid for the condition checkers: `resolution` points over
/// [-1, 1] including both endpoints. Resolution must be odd and >= 3 so
/// that 0 is a grid point (the neutral-opinion symmetry items need it).
/// Points are built by mirroring the nonnegative half, so grid[t] is the
/// exact floating-point negation of grid[R-1-t] and symmetry comparisons
/// are exact.
///
/// exclusion_band: half-width around 0 treated as sign-indeterminate for
/// items whose hypothesis requires a strict sign (0 = only exact zeros
/// are skipped). witness_cap limits the recorded witnesses per item
/// (0 = unlimited). dist_merge_tol merges realized f-distances that
/// differ only by accumulated rounding in the g-monotonicity items.
struct GridSpec {
    std::size_t resolution = 41;
    double exclusion_band = 0.0;
    std::size_t witness_cap = 1000;
    double tol_strict = 0.0;
    double tol_eq = 1e-12;
    double dist_merge_tol = 1e-12;

    void validate() const {
        if (resolution < 3 || resolution % 2 == 0) {
            throw std::invalid_argument("GridSpec: resolution must be odd and >= 3");
        }
        if (exclusion_band < 0.0) {
            throw std::invalid_argument("GridSpec: exclusion_band must be >= 0");
        }
    }

    std::size_t half() const { return (resolution - 1) / 2; }

    /// Grid values, index t = 0..resolution-1; value at t = half() is
    /// exactly 0 and points[t] == -points[resolution-1-t] bitwise.
    std::vector<double> points() const {
        validate();
        const std::size_t h = half();
        std::vector<double> pts(resolution);
        pts[h] = 0.0;
        for (std::size_t k = 1; k <= h; ++k) {
            const double v = (2.0 * static_cast<double>(k)) /
                             static_cast<double>(resolution - 1);
            pts[h + k] = v;
            pts[h - k] = -v;
        }
        return pts;
    }

    double step() const {
        return 2.0 / static_cast<double>(resolution - 1);
    }
};

/// Uniform surface grid over [-1, 1] with `resolution` >= 2 points
/// including endpoints; resolution may be even. Odd resolutions reuse
/// the mirrored construction so symmetric points negate exactly.
inline std::vector<double> surface_points(std::size_t resolution) {
    if (resolution < 2) {
        throw std::invalid_argument("surface_points: resolution must be >= 2");
    }
    if (resolution % 2 == 1) {
        GridSpec spec;
        spec.resolution = resolution;
        return spec.points();
    }
    std::vector<double> pts(resolution);
    for (std::size_t t = 0; t < resolution; ++t) {
        pts[t] = -1.0 + (2.0 * static_cast<double>(t)) /
                            static_cast<double>(resolution - 1);
    }
    return pts;
}

}  // namespace opdyn
