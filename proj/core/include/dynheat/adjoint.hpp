#pragma once

#include <vector>

#include "dynheat/field.hpp"
#include "dynheat/forward.hpp"
#include "dynheat/grid.hpp"
#include "dynheat/problem.hpp"

namespace dynheat {

/// Terminal datum of the adjoint problem: Y(T,·,f) − Y_T^δ.
struct TerminalResidual {
    ProductState residual;
};

TerminalResidual terminal_residual(const Trajectory& traj,
                                   const ProductState& observed,
                                   const SpatialGrid& grid);

/// Adjoint snapshots, states[k] ≈ φ(t_k, ·); states[n_steps] equals the
/// terminal residual exactly.
struct AdjointTrajectory {
    std::vector<ProductState> states;
};

/// Solve the backward adjoint problem
///   φ_t + d φ_xx − a φ = 0,   φ_t(t,0) = −d φ_x(t,0) + b_L φ(t,0),
///   φ_t(t,ℓ) =  d φ_x(t,ℓ) + b_R φ(t,ℓ),   φ(T,·) = res.
/// Under s = T − t this is the direct problem with zero source and initial
/// state res, so it reuses the same Crank–Nicolson assembly; the result is
/// re-reversed in time.
AdjointTrajectory solve_adjoint(const ProblemSetup& setup,
                                const TerminalResidual& res, const Grids& grids);

/// Relative defect of the duality identity ⟨Ψδf, w⟩ = ⟨δf·r, Φ_w⟩ with Φ_w the
/// adjoint solution with terminal datum w and Ψ the zero-initial-data
/// input-output map. O(Δx²+Δt²) for the continuous-adjoint discretization.
double adjoint_identity_gap(const ProblemSetup& setup, const SpaceSource& df,
                            const ProductState& w, const Grids& grids);

}  // namespace dynheat
