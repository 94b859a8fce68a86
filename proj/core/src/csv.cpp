#include "dynheat/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dynheat::csv {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("csv: cannot open " + path.string() +
                                 " for writing");
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_space(const std::filesystem::path& path, const SpatialGrid& grid,
                 std::span<const double> values, const std::string& value_name) {
    if (values.size() != grid.n_nodes())
        throw std::invalid_argument("csv::write_space: incompatible grids");
    auto out = open_out(path);
    out << "x," << value_name << "\n";
    for (std::size_t i = 0; i < values.size(); ++i)
        out << format_double(grid.node(i)) << ',' << format_double(values[i])
            << '\n';
}

void write_recovered(const std::filesystem::path& path, const SpatialGrid& grid,
                     const SpaceSource& f_true, const SpaceSource& f_rec) {
    if (f_true.size() != grid.n_nodes() || f_rec.size() != grid.n_nodes())
        throw std::invalid_argument("csv::write_recovered: incompatible grids");
    auto out = open_out(path);
    out << "x,f_true,f_rec\n";
    for (std::size_t i = 0; i < grid.n_nodes(); ++i)
        out << format_double(grid.node(i)) << ',' << format_double(f_true[i])
            << ',' << format_double(f_rec[i]) << '\n';
}

void write_gradient(const std::filesystem::path& path, const SpatialGrid& grid,
                    const GradientField& g) {
    write_space(path, grid, g.values.values, "grad");
}

void write_spacetime(const std::filesystem::path& path, const Grids& grids,
                     std::span<const ProductState> states) {
    if (states.size() != grids.time.n_steps() + 1)
        throw std::invalid_argument("csv::write_spacetime: incompatible grids");
    auto out = open_out(path);
    out << "t,x,value\n";
    for (std::size_t k = 0; k < states.size(); ++k) {
        const std::string t = format_double(grids.time.t(k));
        for (std::size_t i = 0; i < grids.space.n_nodes(); ++i)
            out << t << ',' << format_double(grids.space.node(i)) << ','
                << format_double(states[k][i]) << '\n';
    }
}

void write_trace(const std::filesystem::path& path,
                 const ReconstructionTrace& trace) {
    auto out = open_out(path);
    out << "k,alpha,J,e,E,grad_norm\n";
    for (const auto& row : trace.rows) {
        out << row.k << ',';
        if (row.alpha) out << format_double(*row.alpha);
        out << ',' << format_double(row.J) << ',' << format_double(row.e) << ',';
        if (row.E) out << format_double(*row.E);
        out << ',';
        if (row.grad_norm) out << format_double(*row.grad_norm);
        out << '\n';
    }
}

void write_error_table(const std::filesystem::path& path,
                       const ReconstructionTrace& trace, std::size_t max_k) {
    auto out = open_out(path);
    out << "k,e,E\n";
    for (const auto& row : trace.rows) {
        if (row.k < 1 || row.k > max_k) continue;
        out << row.k << ',' << format_double(row.e) << ',';
        if (row.E) out << format_double(*row.E);
        out << '\n';
    }
}

std::vector<double> read_space(const std::filesystem::path& path,
                               const SpatialGrid& grid) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("csv: cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("csv: empty file " + path.string());
    std::vector<double> values;
    values.reserve(grid.n_nodes());
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("csv: malformed row in " + path.string() +
                                     ": " + line);
        values.push_back(std::stod(line.substr(comma + 1)));
    }
    if (values.size() != grid.n_nodes())
        throw std::runtime_error(
            "csv: " + path.string() + " has " + std::to_string(values.size()) +
            " rows, grid needs " + std::to_string(grid.n_nodes()));
    return values;
}

}  // namespace dynheat::csv
