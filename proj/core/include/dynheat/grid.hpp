#pragma once

#include <cstddef>
#include <vector>

namespace dynheat {

/// Uniform spatial grid on [0, ell] with n_cells cells (n_cells+1 nodes).
/// n_cells < 4 is rejected: the one-sided boundary stencils need interior room.
class SpatialGrid {
public:
    SpatialGrid(double ell, std::size_t n_cells);

    double length() const { return ell_; }
    std::size_t n_cells() const { return n_cells_; }
    std::size_t n_nodes() const { return n_cells_ + 1; }
    double dx() const { return dx_; }
    double node(std::size_t i) const { return nodes_[i]; }
    const std::vector<double>& nodes() const { return nodes_; }

    bool operator==(const SpatialGrid&) const = default;

private:
    double ell_;
    std::size_t n_cells_;
    double dx_;
    std::vector<double> nodes_;
};

/// Uniform time grid covering [0, T] with n_steps steps.
class TimeGrid {
public:
    TimeGrid(double final_time, std::size_t n_steps);

    double final_time() const { return final_time_; }
    std::size_t n_steps() const { return n_steps_; }
    double dt() const { return dt_; }
    double t(std::size_t k) const { return static_cast<double>(k) * dt_; }

    bool operator==(const TimeGrid&) const = default;

private:
    double final_time_;
    std::size_t n_steps_;
    double dt_;
};

struct Grids {
    SpatialGrid space;
    TimeGrid time;
};

}  // namespace dynheat
