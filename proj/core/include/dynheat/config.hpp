#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dynheat/grid.hpp"
#include "dynheat/landweber.hpp"
#include "dynheat/observation.hpp"
#include "dynheat/problem.hpp"

namespace dynheat {

/// Experiment definition, read from a flat sectioned key=value file.
/// Named specs:
///   a, y0, f0:  zero | const:<v>          (f0 additionally: truth)
///   r:          one | const:<v>
///   truth:      parabolic | sine | gaussian | file:<path>
///   noise mode: zeromean | paper | scalar
///   step_mode:  adaptive | fixed:<alpha>
struct ExperimentConfig {
    // [problem]
    double ell = 1.0;
    double T = 1.0;
    double d = 1.0;
    std::string a_spec = "zero";
    double b_left = 0.0;
    double b_right = 0.0;
    std::string r_spec = "one";
    std::string y0_spec = "zero";
    // [discretization]
    std::size_t n_cells = 256;
    std::size_t n_steps = 512;
    // [truth]
    std::string truth_spec = "parabolic";
    // [noise]
    std::vector<double> noise_levels{0.01, 0.03, 0.05};
    std::uint64_t seed = 1;
    std::string noise_mode = "zeromean";
    // [solver]
    double epsilon = 1e-6;
    double e_J = 1e-6;
    std::string f0_spec = "zero";
    std::string step_mode = "adaptive";
    std::size_t max_iter = 1000;
    // [output]
    std::string out_dir = "out";

    bool operator==(const ExperimentConfig&) const = default;
};

/// Parse; unknown sections/keys and malformed values are errors
/// (std::invalid_argument with the offending line).
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_file(const std::string& path);

/// Canonical text form; parse(serialize(c)) == c.
std::string serialize_config(const ExperimentConfig& c);

/// Presets for the three worked reconstruction examples (parabolic/sine/
/// gaussian truth; ε = e_J = 1e−6, 1e−8, 1e−8; scalar noise reading).
ExperimentConfig example_preset(int which);

Grids make_grids(const ExperimentConfig& c);
ProblemSetup make_setup(const ExperimentConfig& c, const Grids& grids);
SpaceSource resolve_truth(const ExperimentConfig& c, const SpatialGrid& grid);
SpaceSource resolve_f0(const ExperimentConfig& c, const SpaceSource& truth,
                       const SpatialGrid& grid);
NoiseMode parse_noise_mode(const std::string& s);
const char* to_string(NoiseMode m);

}  // namespace dynheat
