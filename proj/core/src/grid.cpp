#include "dynheat/grid.hpp"

#include <stdexcept>
#include <string>

namespace dynheat {

SpatialGrid::SpatialGrid(double ell, std::size_t n_cells)
    : ell_(ell), n_cells_(n_cells) {
    if (!(ell > 0.0))
        throw std::invalid_argument("SpatialGrid: domain length must be positive");
    if (n_cells < 4)
        throw std::invalid_argument("SpatialGrid: n_cells must be at least 4, got " +
                                    std::to_string(n_cells));
    dx_ = ell / static_cast<double>(n_cells);
    nodes_.resize(n_cells + 1);
    for (std::size_t i = 0; i <= n_cells; ++i)
        nodes_[i] = static_cast<double>(i) * ell / static_cast<double>(n_cells);
    nodes_.front() = 0.0;
    nodes_.back() = ell;
}

TimeGrid::TimeGrid(double final_time, std::size_t n_steps)
    : final_time_(final_time), n_steps_(n_steps) {
    if (!(final_time > 0.0))
        throw std::invalid_argument("TimeGrid: final time must be positive");
    if (n_steps < 2)
        throw std::invalid_argument("TimeGrid: n_steps must be at least 2, got " +
                                    std::to_string(n_steps));
    dt_ = final_time / static_cast<double>(n_steps);
}

}  // namespace dynheat
