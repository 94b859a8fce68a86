#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "dynheat/field.hpp"
#include "dynheat/grid.hpp"
#include "dynheat/landweber.hpp"

namespace dynheat::csv {

/// All writers emit exact headers and %.17g numbers (round-trip faithful,
/// deterministic byte output for identical inputs).

std::string format_double(double v);

/// header `x,<value_name>`, one row per node.
void write_space(const std::filesystem::path& path, const SpatialGrid& grid,
                 std::span<const double> values,
                 const std::string& value_name = "value");

/// header `x,f_true,f_rec`.
void write_recovered(const std::filesystem::path& path, const SpatialGrid& grid,
                     const SpaceSource& f_true, const SpaceSource& f_rec);

/// header `x,grad`.
void write_gradient(const std::filesystem::path& path, const SpatialGrid& grid,
                    const GradientField& g);

/// header `t,x,value`, long format, (n_steps+1)·(n_nodes) rows.
void write_spacetime(const std::filesystem::path& path, const Grids& grids,
                     std::span<const ProductState> states);

/// header `k,alpha,J,e,E,grad_norm`; optional fields empty when absent.
void write_trace(const std::filesystem::path& path,
                 const ReconstructionTrace& trace);

/// header `k,e,E`, rows k = 1..n (Table-1 style error table).
void write_error_table(const std::filesystem::path& path,
                       const ReconstructionTrace& trace, std::size_t max_k);

/// Single-column-pair reader for tabulated sources (`x,value`); checks the
/// node count against the grid.
std::vector<double> read_space(const std::filesystem::path& path,
                               const SpatialGrid& grid);

}  // namespace dynheat::csv
