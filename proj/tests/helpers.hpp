#pragma once

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "dynheat/field.hpp"
#include "dynheat/grid.hpp"
#include "dynheat/observation.hpp"
#include "dynheat/problem.hpp"

namespace dynheat::testing {

inline Grids unit_grids(std::size_t n_cells, std::size_t n_steps) {
    return Grids{SpatialGrid(1.0, n_cells), TimeGrid(1.0, n_steps)};
}

inline SpaceSource parabolic_source(const SpatialGrid& g) {
    return sampled_source(g, [](double x) { return x * (1.0 - x); });
}

inline SpaceSource sine_source(const SpatialGrid& g) {
    return sampled_source(g, [](double x) { return std::sin(M_PI * x); });
}

inline SpaceSource gaussian_source(const SpatialGrid& g) {
    return sampled_source(
        g, [](double x) { return std::exp(-8.0 * (x - 0.5) * (x - 0.5)); });
}

/// Smooth random field defined by continuum Fourier coefficients, so the same
/// draw can be sampled consistently on every refinement level.
struct SmoothField {
    std::array<double, 4> sin_coef{};
    std::array<double, 4> cos_coef{};

    static SmoothField draw(std::mt19937_64& rng) {
        SmoothField f;
        for (int m = 0; m < 4; ++m) {
            const double decay = std::pow(m + 1.0, 3.0);
            f.sin_coef[m] = (2.0 * uniform01(rng) - 1.0) / decay;
            f.cos_coef[m] = (2.0 * uniform01(rng) - 1.0) / decay;
        }
        return f;
    }

    double operator()(double x) const {
        double v = 0.0;
        for (int m = 0; m < 4; ++m) {
            const double w = (m + 1) * M_PI * x;
            v += sin_coef[m] * std::sin(w) + cos_coef[m] * std::cos(w);
        }
        return v;
    }

    SpaceSource sample(const SpatialGrid& g) const {
        return sampled_source(g, *this);
    }

    ProductState sample_state(const SpatialGrid& g) const {
        return sampled_state(g, *this);
    }
};

/// Least-squares slope of -log2(err) against the level index.
inline double observed_order(const std::vector<double>& errors) {
    const std::size_t n = errors.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = static_cast<double>(i);
        const double y = -std::log2(std::max(errors[i], 1e-300));
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace dynheat::testing
