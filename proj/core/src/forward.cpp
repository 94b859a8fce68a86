#include "dynheat/forward.hpp"

#include <cmath>
#include <stdexcept>

#include "dynheat/errors.hpp"

namespace dynheat {

namespace {

void fill_source(const ProblemSetup& setup, const SpaceSource& f, std::size_t k,
                 std::vector<double>& s) {
    const std::size_t n = s.size();
    for (std::size_t i = 1; i + 1 < n; ++i) s[i] = f[i] * setup.r(k, i);
    s[0] = 0.0;
    s[n - 1] = 0.0;
    if (const auto& g = setup.boundary_source()) {
        s[0] = g->left[k];
        s[n - 1] = g->right[k];
    }
}

bool all_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

}  // namespace

Trajectory solve_forward_oriented(const ProblemSetup& setup, const SpaceSource& f,
                                  const Grids& grids, FluxOrientation orientation) {
    setup.validate(grids);
    const std::size_t n = grids.space.n_nodes();
    if (f.size() != n)
        throw std::invalid_argument("solve_forward: source has incompatible grid");

    CrankNicolsonStepper stepper(setup, grids, orientation);
    const std::size_t n_steps = grids.time.n_steps();

    Trajectory traj;
    traj.states.reserve(n_steps + 1);
    traj.states.push_back(setup.initial_state());

    std::vector<double> s0(n), s1(n);
    fill_source(setup, f, 0, s0);
    for (std::size_t k = 0; k < n_steps; ++k) {
        fill_source(setup, f, k + 1, s1);
        ProductState next(n);
        stepper.advance(traj.states.back().values(), s0, s1, next.data());
        if (!all_finite(next.data()))
            throw SolverError("solve_forward: non-finite state", k + 1);
        traj.states.push_back(std::move(next));
        std::swap(s0, s1);
    }
    return traj;
}

Trajectory solve_forward(const ProblemSetup& setup, const SpaceSource& f,
                         const Grids& grids) {
    return solve_forward_oriented(setup, f, grids, FluxOrientation::standard);
}

double modulated_source_norm(const ProblemSetup& setup, const SpaceSource& f,
                             const Grids& grids) {
    const std::size_t n = grids.space.n_nodes();
    const std::size_t steps = grids.time.n_steps();
    std::vector<double> slice(n);
    double acc = 0.0;
    for (std::size_t k = 0; k <= steps; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            const double v = f[i] * setup.r(k, i);
            slice[i] = v * v;
        }
        const double w = (k == 0 || k == steps) ? 0.5 : 1.0;
        acc += w * trapezoid(slice, grids.space.dx());
    }
    return std::sqrt(acc * grids.time.dt());
}

double conservation_residual(const Trajectory& traj, const ProblemSetup& setup,
                             const SpaceSource& f, const Grids& grids) {
    if (!setup.is_conservative())
        throw std::invalid_argument(
            "conservation_residual: requires a == 0, b == 0 and no boundary sources");
    setup.validate(grids);
    const std::size_t steps = grids.time.n_steps();
    if (traj.states.size() != steps + 1)
        throw std::invalid_argument("conservation_residual: trajectory/grid mismatch");

    const auto& sg = grids.space;
    const double dt = grids.time.dt();
    const ProductState ones(sg.n_nodes(), 1.0);

    // ∫ f r dx per time node (r may depend on t)
    std::vector<double> fr(sg.n_nodes());
    auto source_integral = [&](std::size_t k) {
        for (std::size_t i = 0; i < sg.n_nodes(); ++i) fr[i] = f[i] * setup.r(k, i);
        return trapezoid(fr, sg.dx());
    };

    double worst = 0.0;
    double q_prev = product_inner(traj.states[0], ones, sg);
    double s_prev = source_integral(0);
    double max_mass = std::abs(trapezoid(traj.states[0].values(), sg.dx()));
    for (std::size_t k = 0; k < steps; ++k) {
        const double q_next = product_inner(traj.states[k + 1], ones, sg);
        const double s_next = source_integral(k + 1);
        worst = std::max(worst,
                         std::abs(q_next - q_prev - dt * 0.5 * (s_prev + s_next)));
        max_mass = std::max(max_mass,
                            std::abs(trapezoid(traj.states[k + 1].values(), sg.dx())));
        q_prev = q_next;
        s_prev = s_next;
    }
    return worst / std::max(1.0, max_mass);
}

StabilityGap stability_gap(const ProblemSetup& setup, const SpaceSource& f1,
                           const SpaceSource& f2, const Grids& grids) {
    const Trajectory t1 = solve_forward(setup, f1, grids);
    const Trajectory t2 = solve_forward(setup, f2, grids);

    double lhs = 0.0;
    for (std::size_t k = 0; k < t1.states.size(); ++k) {
        const ProductState diff = state_difference(t1.states[k], t2.states[k]);
        lhs = std::max(lhs, product_inner(diff, diff, grids.space));
    }

    const double growth =
        std::exp((1.0 + 2.0 * std::max(setup.a_inf_norm(), setup.b_inf_norm())) *
                 grids.time.final_time());
    const double source_norm =
        modulated_source_norm(setup, source_difference(f1, f2), grids);
    return {lhs, growth * source_norm * source_norm};
}

}  // namespace dynheat
