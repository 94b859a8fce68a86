#include "dynheat/field.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dynheat {

namespace {

void check_nodes(std::size_t have, std::size_t want, const char* what) {
    if (have != want)
        throw std::invalid_argument(std::string(what) +
                                    ": incompatible grids (field has " +
                                    std::to_string(have) + " nodes, grid has " +
                                    std::to_string(want) + ")");
}

}  // namespace

double trapezoid(std::span<const double> values, double dx) {
    const std::size_t n = values.size();
    double sum = 0.5 * (values[0] + values[n - 1]);
    for (std::size_t i = 1; i + 1 < n; ++i) sum += values[i];
    return sum * dx;
}

double product_inner(const ProductState& u, const ProductState& v,
                     const SpatialGrid& grid) {
    check_nodes(u.size(), grid.n_nodes(), "product_inner");
    check_nodes(v.size(), grid.n_nodes(), "product_inner");
    const std::size_t n = u.size();
    double sum = 0.5 * (u[0] * v[0] + u[n - 1] * v[n - 1]);
    for (std::size_t i = 1; i + 1 < n; ++i) sum += u[i] * v[i];
    return sum * grid.dx() + u.left() * v.left() + u.right() * v.right();
}

double product_norm(const ProductState& u, const SpatialGrid& grid) {
    return std::sqrt(product_inner(u, u, grid));
}

double spacetime_inner(std::span<const ProductState> u,
                       std::span<const ProductState> v, const Grids& grids) {
    const std::size_t n = grids.time.n_steps() + 1;
    if (u.size() != n || v.size() != n)
        throw std::invalid_argument(
            "spacetime_inner: incompatible grids (snapshot counts " +
            std::to_string(u.size()) + ", " + std::to_string(v.size()) +
            " vs " + std::to_string(n) + ")");
    double sum = 0.5 * (product_inner(u[0], v[0], grids.space) +
                        product_inner(u[n - 1], v[n - 1], grids.space));
    for (std::size_t k = 1; k + 1 < n; ++k)
        sum += product_inner(u[k], v[k], grids.space);
    return sum * grids.time.dt();
}

double l2_space_inner(const SpaceSource& f, const SpaceSource& g,
                      const SpatialGrid& grid) {
    check_nodes(f.size(), grid.n_nodes(), "l2_space_inner");
    check_nodes(g.size(), grid.n_nodes(), "l2_space_inner");
    const std::size_t n = f.size();
    double sum = 0.5 * (f[0] * g[0] + f[n - 1] * g[n - 1]);
    for (std::size_t i = 1; i + 1 < n; ++i) sum += f[i] * g[i];
    return sum * grid.dx();
}

double l2_space_norm(const SpaceSource& f, const SpatialGrid& grid) {
    return std::sqrt(l2_space_inner(f, f, grid));
}

ProductState state_difference(const ProductState& a, const ProductState& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("state_difference: incompatible grids");
    ProductState out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

SpaceSource source_axpy(const SpaceSource& x, double alpha, const SpaceSource& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("source_axpy: incompatible grids");
    SpaceSource out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + alpha * y[i];
    return out;
}

SpaceSource source_difference(const SpaceSource& a, const SpaceSource& b) {
    return source_axpy(a, -1.0, b);
}

}  // namespace dynheat
