#include "dynheat/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "dynheat/csv.hpp"

namespace dynheat {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& v, const std::string& key) {
    std::size_t pos = 0;
    double out;
    try {
        out = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad number for " + key + ": " + v);
    }
    if (pos != v.size())
        throw std::invalid_argument("config: bad number for " + key + ": " + v);
    return out;
}

std::size_t to_size(const std::string& v, const std::string& key) {
    const double d = to_double(v, key);
    if (d < 0 || d != std::floor(d))
        throw std::invalid_argument("config: " + key + " must be a nonnegative integer");
    return static_cast<std::size_t>(d);
}

std::uint64_t to_u64(const std::string& v, const std::string& key) {
    try {
        return std::stoull(v);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad integer for " + key + ": " + v);
    }
}

std::vector<double> to_list(const std::string& v, const std::string& key) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(to_double(item, key));
    }
    if (out.empty())
        throw std::invalid_argument("config: " + key + " must be a nonempty list");
    return out;
}

/// spec form `name` or `name:<arg>`; returns {name, arg}.
std::pair<std::string, std::string> split_spec(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) return {s, ""};
    return {s.substr(0, colon), s.substr(colon + 1)};
}

void check_value_spec(const std::string& key, const std::string& s,
                      std::initializer_list<const char*> names,
                      bool allow_const) {
    const auto [name, arg] = split_spec(s);
    for (const char* n : names)
        if (name == n) {
            if (!arg.empty() && name != "file")
                throw std::invalid_argument("config: " + key + ": '" + name +
                                            "' takes no argument");
            return;
        }
    if (allow_const && name == "const") {
        to_double(arg, key);
        return;
    }
    throw std::invalid_argument("config: unknown " + key + " spec: " + s);
}

}  // namespace

ExperimentConfig parse_config(std::istream& in) {
    ExperimentConfig c;
    std::string line, section;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::invalid_argument("config: malformed section at line " +
                                            std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected key = value at line " +
                                        std::to_string(lineno) + ": " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const std::string qual = section + "." + key;

        if (qual == "problem.ell") c.ell = to_double(value, qual);
        else if (qual == "problem.T") c.T = to_double(value, qual);
        else if (qual == "problem.d") c.d = to_double(value, qual);
        else if (qual == "problem.a") c.a_spec = value;
        else if (qual == "problem.b_left") c.b_left = to_double(value, qual);
        else if (qual == "problem.b_right") c.b_right = to_double(value, qual);
        else if (qual == "problem.r") c.r_spec = value;
        else if (qual == "problem.y0") c.y0_spec = value;
        else if (qual == "discretization.n_cells") c.n_cells = to_size(value, qual);
        else if (qual == "discretization.n_steps") c.n_steps = to_size(value, qual);
        else if (qual == "truth.source") c.truth_spec = value;
        else if (qual == "noise.levels") c.noise_levels = to_list(value, qual);
        else if (qual == "noise.seed") c.seed = to_u64(value, qual);
        else if (qual == "noise.mode") c.noise_mode = value;
        else if (qual == "solver.epsilon") c.epsilon = to_double(value, qual);
        else if (qual == "solver.e_J") c.e_J = to_double(value, qual);
        else if (qual == "solver.f0") c.f0_spec = value;
        else if (qual == "solver.step_mode") c.step_mode = value;
        else if (qual == "solver.max_iter") c.max_iter = to_size(value, qual);
        else if (qual == "output.dir") c.out_dir = value;
        else
            throw std::invalid_argument("config: unknown key '" + qual +
                                        "' at line " + std::to_string(lineno));
    }

    // validate the named specs and enumerations eagerly
    check_value_spec("a", c.a_spec, {"zero"}, true);
    check_value_spec("r", c.r_spec, {"one"}, true);
    check_value_spec("y0", c.y0_spec, {"zero"}, true);
    check_value_spec("truth", c.truth_spec, {"parabolic", "sine", "gaussian", "file"},
                     true);
    check_value_spec("f0", c.f0_spec, {"zero", "truth"}, true);
    parse_noise_mode(c.noise_mode);
    {
        const auto [name, arg] = split_spec(c.step_mode);
        if (name == "fixed") to_double(arg, "step_mode");
        else if (name != "adaptive")
            throw std::invalid_argument("config: unknown step_mode: " + c.step_mode);
    }
    if (!(c.epsilon >= 0.0))
        throw std::invalid_argument("config: epsilon must be >= 0");
    if (!(c.e_J > 0.0))
        throw std::invalid_argument("config: e_J must be > 0");
    for (double p : c.noise_levels)
        if (p < 0.0 || p > 1.0)
            throw std::invalid_argument("config: noise levels must lie in [0,1]");
    return c;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    return parse_config(in);
}

std::string serialize_config(const ExperimentConfig& c) {
    std::ostringstream out;
    out << "[problem]\n"
        << "ell = " << csv::format_double(c.ell) << "\n"
        << "T = " << csv::format_double(c.T) << "\n"
        << "d = " << csv::format_double(c.d) << "\n"
        << "a = " << c.a_spec << "\n"
        << "b_left = " << csv::format_double(c.b_left) << "\n"
        << "b_right = " << csv::format_double(c.b_right) << "\n"
        << "r = " << c.r_spec << "\n"
        << "y0 = " << c.y0_spec << "\n\n"
        << "[discretization]\n"
        << "n_cells = " << c.n_cells << "\n"
        << "n_steps = " << c.n_steps << "\n\n"
        << "[truth]\n"
        << "source = " << c.truth_spec << "\n\n"
        << "[noise]\n"
        << "levels = ";
    for (std::size_t i = 0; i < c.noise_levels.size(); ++i)
        out << (i ? ", " : "") << csv::format_double(c.noise_levels[i]);
    out << "\n"
        << "seed = " << c.seed << "\n"
        << "mode = " << c.noise_mode << "\n\n"
        << "[solver]\n"
        << "epsilon = " << csv::format_double(c.epsilon) << "\n"
        << "e_J = " << csv::format_double(c.e_J) << "\n"
        << "f0 = " << c.f0_spec << "\n"
        << "step_mode = " << c.step_mode << "\n"
        << "max_iter = " << c.max_iter << "\n\n"
        << "[output]\n"
        << "dir = " << c.out_dir << "\n";
    return out.str();
}

ExperimentConfig example_preset(int which) {
    ExperimentConfig c;
    c.noise_mode = "scalar";
    switch (which) {
        case 1:
            c.truth_spec = "parabolic";
            c.epsilon = c.e_J = 1e-6;
            break;
        case 2:
            c.truth_spec = "sine";
            c.epsilon = c.e_J = 1e-8;
            break;
        case 3:
            c.truth_spec = "gaussian";
            c.epsilon = c.e_J = 1e-8;
            break;
        default:
            throw std::invalid_argument("example_preset: expected 1, 2 or 3");
    }
    return c;
}

Grids make_grids(const ExperimentConfig& c) {
    return Grids{SpatialGrid(c.ell, c.n_cells), TimeGrid(c.T, c.n_steps)};
}

namespace {

std::function<double(double)> scalar_spec(const std::string& spec) {
    const auto [name, arg] = split_spec(spec);
    if (name == "zero") return {};
    if (name == "const") {
        const double v = std::stod(arg);
        return [v](double) { return v; };
    }
    throw std::invalid_argument("config: unsupported spec: " + spec);
}

}  // namespace

ProblemSetup make_setup(const ExperimentConfig& c, const Grids& grids) {
    ProblemFunctions fns;
    fns.d = c.d;
    fns.b_left = c.b_left;
    fns.b_right = c.b_right;
    fns.a = scalar_spec(c.a_spec);
    fns.y0 = scalar_spec(c.y0_spec);
    {
        const auto [name, arg] = split_spec(c.r_spec);
        if (name == "const") {
            const double v = std::stod(arg);
            fns.r = [v](double, double) { return v; };
        } else if (name != "one") {
            throw std::invalid_argument("config: unsupported r spec: " + c.r_spec);
        }
    }
    return ProblemSetup::sample(grids, fns);
}

SpaceSource resolve_truth(const ExperimentConfig& c, const SpatialGrid& grid) {
    const auto [name, arg] = split_spec(c.truth_spec);
    if (name == "parabolic")
        return sampled_source(grid, [](double x) { return x * (1.0 - x); });
    if (name == "sine")
        return sampled_source(grid, [](double x) { return std::sin(M_PI * x); });
    if (name == "gaussian")
        return sampled_source(
            grid, [](double x) { return std::exp(-8.0 * (x - 0.5) * (x - 0.5)); });
    if (name == "file") return SpaceSource(csv::read_space(arg, grid));
    if (name == "const") return SpaceSource(grid.n_nodes(), std::stod(arg));
    throw std::invalid_argument("config: unknown truth source: " + c.truth_spec);
}

SpaceSource resolve_f0(const ExperimentConfig& c, const SpaceSource& truth,
                       const SpatialGrid& grid) {
    const auto [name, arg] = split_spec(c.f0_spec);
    if (name == "zero") return SpaceSource(grid.n_nodes(), 0.0);
    if (name == "truth") return truth;
    if (name == "const") return SpaceSource(grid.n_nodes(), std::stod(arg));
    throw std::invalid_argument("config: unknown f0 spec: " + c.f0_spec);
}

NoiseMode parse_noise_mode(const std::string& s) {
    if (s == "zeromean") return NoiseMode::zero_mean;
    if (s == "paper") return NoiseMode::paper_per_node;
    if (s == "scalar") return NoiseMode::paper_scalar;
    throw std::invalid_argument("config: unknown noise mode: " + s);
}

const char* to_string(NoiseMode m) {
    switch (m) {
        case NoiseMode::zero_mean: return "zeromean";
        case NoiseMode::paper_per_node: return "paper";
        case NoiseMode::paper_scalar: return "scalar";
    }
    return "unknown";
}

}  // namespace dynheat
