#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "dynheat/grid.hpp"

namespace dynheat {

/// Element of the product space L²(0,ℓ)×ℝ²: a temperature profile together
/// with the two boundary temperatures. The boundary values are views of the
/// endpoint nodes (single storage), so the trace coupling y_Γ = y|_Γ holds
/// structurally, not numerically.
class ProductState {
public:
    ProductState() = default;
    explicit ProductState(std::size_t n_nodes, double value = 0.0)
        : values_(n_nodes, value) {}
    explicit ProductState(std::vector<double> values)
        : values_(std::move(values)) {}

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    double& operator[](std::size_t i) { return values_[i]; }

    double left() const { return values_.front(); }
    double right() const { return values_.back(); }

    std::span<const double> values() const { return values_; }
    std::vector<double>& data() { return values_; }
    const std::vector<double>& data() const { return values_; }

private:
    std::vector<double> values_;
};

/// Spatial source f(x) sampled at grid nodes — the unknown of the inverse
/// problem, an element of L²(0,ℓ).
struct SpaceSource {
    std::vector<double> values;

    SpaceSource() = default;
    explicit SpaceSource(std::size_t n_nodes, double value = 0.0)
        : values(n_nodes, value) {}
    explicit SpaceSource(std::vector<double> v) : values(std::move(v)) {}

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    double& operator[](std::size_t i) { return values[i]; }
};

/// Boundary source time series G at the two endpoints, sampled at t_k.
struct BoundarySourcePair {
    std::vector<double> left;
    std::vector<double> right;
};

template <typename F>
ProductState sampled_state(const SpatialGrid& grid, F&& fn) {
    ProductState s(grid.n_nodes());
    for (std::size_t i = 0; i < grid.n_nodes(); ++i) s[i] = fn(grid.node(i));
    return s;
}

template <typename F>
SpaceSource sampled_source(const SpatialGrid& grid, F&& fn) {
    SpaceSource s(grid.n_nodes());
    for (std::size_t i = 0; i < grid.n_nodes(); ++i) s[i] = fn(grid.node(i));
    return s;
}

/// Composite trapezoid of nodal values over [0, ell].
double trapezoid(std::span<const double> values, double dx);

/// ⟨u,v⟩ = ∫₀^ℓ u v dx + u(0)v(0) + u(ℓ)v(ℓ), trapezoid in space.
/// Throws std::invalid_argument on incompatible grids.
double product_inner(const ProductState& u, const ProductState& v,
                     const SpatialGrid& grid);

double product_norm(const ProductState& u, const SpatialGrid& grid);

/// Space-time inner product: trapezoid in time over product_inner slices.
double spacetime_inner(std::span<const ProductState> u,
                       std::span<const ProductState> v, const Grids& grids);

/// ⟨f,g⟩_{L²(0,ℓ)} by trapezoid (no boundary point masses).
double l2_space_inner(const SpaceSource& f, const SpaceSource& g,
                      const SpatialGrid& grid);

double l2_space_norm(const SpaceSource& f, const SpatialGrid& grid);

// small vector helpers used throughout the solvers
ProductState state_difference(const ProductState& a, const ProductState& b);
SpaceSource source_axpy(const SpaceSource& x, double alpha, const SpaceSource& y);  // x + alpha*y
SpaceSource source_difference(const SpaceSource& a, const SpaceSource& b);

}  // namespace dynheat
