#include "dynheat/adjoint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dynheat {

TerminalResidual terminal_residual(const Trajectory& traj,
                                   const ProductState& observed,
                                   const SpatialGrid& grid) {
    if (observed.size() != grid.n_nodes())
        throw std::invalid_argument("terminal_residual: incompatible grids");
    return {state_difference(traj.final_state(), observed)};
}

AdjointTrajectory solve_adjoint(const ProblemSetup& setup,
                                const TerminalResidual& res, const Grids& grids) {
    if (res.residual.size() != grids.space.n_nodes())
        throw std::invalid_argument("solve_adjoint: incompatible grids");

    // Under s = T − t the adjoint system becomes the direct problem with zero
    // source and initial state equal to the terminal residual.
    const ProblemSetup reversed = setup.with_initial_state(res.residual);
    const SpaceSource zero(grids.space.n_nodes(), 0.0);
    Trajectory fwd = solve_forward(reversed, zero, grids);

    AdjointTrajectory adj;
    adj.states.resize(fwd.states.size());
    std::move(fwd.states.rbegin(), fwd.states.rend(), adj.states.begin());
    // states[n_steps] must equal the terminal residual exactly
    adj.states.back() = res.residual;
    return adj;
}

double adjoint_identity_gap(const ProblemSetup& setup, const SpaceSource& df,
                            const ProductState& w, const Grids& grids) {
    const ProblemSetup psi_setup = setup.with_zero_data();
    const Trajectory fwd = solve_forward(psi_setup, df, grids);
    const double lhs = product_inner(fwd.final_state(), w, grids.space);

    const AdjointTrajectory phi = solve_adjoint(setup, {w}, grids);

    // ⟨δf·r, φ⟩ over (0,T)×(0,ℓ): interior pairing only, trapezoid in both.
    const std::size_t n = grids.space.n_nodes();
    const std::size_t steps = grids.time.n_steps();
    std::vector<double> slice(n);
    double rhs = 0.0;
    for (std::size_t k = 0; k <= steps; ++k) {
        for (std::size_t i = 0; i < n; ++i)
            slice[i] = df[i] * setup.r(k, i) * phi.states[k][i];
        const double wgt = (k == 0 || k == steps) ? 0.5 : 1.0;
        rhs += wgt * trapezoid(slice, grids.space.dx());
    }
    rhs *= grids.time.dt();

    const double scale = product_norm(fwd.final_state(), grids.space) *
                             product_norm(w, grids.space) +
                         1e-300;
    return std::abs(lhs - rhs) / scale;
}

}  // namespace dynheat
