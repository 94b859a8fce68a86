#include "dynheat/objective.hpp"

#include <cmath>
#include <stdexcept>

namespace dynheat {

namespace {

void check_epsilon(const TikhonovConfig& cfg) {
    if (!(cfg.epsilon >= 0.0))
        throw std::invalid_argument("TikhonovConfig: epsilon must be >= 0");
}

}  // namespace

double evaluate(const ProblemSetup& setup, const SpaceSource& f,
                const Observation& obs, const TikhonovConfig& cfg,
                const Grids& grids) {
    check_epsilon(cfg);
    const Trajectory traj = solve_forward(setup, f, grids);
    const ProductState res = state_difference(traj.final_state(), obs.data);
    const double mismatch = product_inner(res, res, grids.space);
    const double reg = l2_space_norm(f, grids.space);
    return 0.5 * mismatch + 0.5 * cfg.epsilon * reg * reg;
}

GradientField gradient_from_adjoint(const AdjointTrajectory& phi,
                                    const ProblemSetup& setup,
                                    const SpaceSource& f,
                                    const TikhonovConfig& cfg,
                                    const Grids& grids) {
    check_epsilon(cfg);
    const std::size_t n = grids.space.n_nodes();
    const std::size_t steps = grids.time.n_steps();
    if (phi.states.size() != steps + 1 || f.size() != n)
        throw std::invalid_argument("gradient_from_adjoint: incompatible grids");

    GradientField g;
    g.values = SpaceSource(n, 0.0);
    const double dt = grids.time.dt();
    for (std::size_t k = 0; k <= steps; ++k) {
        const double w = (k == 0 || k == steps) ? 0.5 : 1.0;
        const ProductState& slice = phi.states[k];
        for (std::size_t i = 0; i < n; ++i)
            g.values[i] += w * slice[i] * setup.r(k, i);
    }
    for (std::size_t i = 0; i < n; ++i)
        g.values[i] = g.values[i] * dt + cfg.epsilon * f[i];

    if (setup.boundary_source()) {
        BoundarySourcePair traces;
        traces.left.resize(steps + 1);
        traces.right.resize(steps + 1);
        for (std::size_t k = 0; k <= steps; ++k) {
            traces.left[k] = phi.states[k].left();
            traces.right[k] = phi.states[k].right();
        }
        g.general_boundary = std::move(traces);
    }
    return g;
}

GradientField gradient(const ProblemSetup& setup, const SpaceSource& f,
                       const Observation& obs, const TikhonovConfig& cfg,
                       const Grids& grids) {
    const Trajectory traj = solve_forward(setup, f, grids);
    const TerminalResidual res = terminal_residual(traj, obs.data, grids.space);
    const AdjointTrajectory phi = solve_adjoint(setup, res, grids);
    return gradient_from_adjoint(phi, setup, f, cfg, grids);
}

double lipschitz_constant(const ProblemSetup& setup, const Grids& grids) {
    const double T = grids.time.final_time();
    const double m = std::max(setup.a_inf_norm(), setup.b_inf_norm());
    return std::sqrt(2.0 * T * std::exp((1.0 + 4.0 * m) * T));
}

double MonotonicityGap::relative_gap() const {
    return std::abs(lhs - rhs) / std::max(rhs, 1e-300);
}

MonotonicityGap monotonicity_gap(const ProblemSetup& setup, const SpaceSource& f,
                                 const SpaceSource& df, const Observation& obs,
                                 const TikhonovConfig& cfg, const Grids& grids) {
    const SpaceSource f2 = source_axpy(f, 1.0, df);

    const Trajectory t1 = solve_forward(setup, f, grids);
    const Trajectory t2 = solve_forward(setup, f2, grids);

    const AdjointTrajectory phi1 =
        solve_adjoint(setup, terminal_residual(t1, obs.data, grids.space), grids);
    const AdjointTrajectory phi2 =
        solve_adjoint(setup, terminal_residual(t2, obs.data, grids.space), grids);

    const GradientField g1 = gradient_from_adjoint(phi1, setup, f, cfg, grids);
    const GradientField g2 = gradient_from_adjoint(phi2, setup, f2, cfg, grids);

    const double lhs =
        l2_space_inner(source_difference(g2.values, g1.values), df, grids.space);

    const ProductState dY = state_difference(t2.final_state(), t1.final_state());
    const double dfn = l2_space_norm(df, grids.space);
    const double rhs =
        product_inner(dY, dY, grids.space) + cfg.epsilon * dfn * dfn;
    return {lhs, rhs};
}

}  // namespace dynheat
