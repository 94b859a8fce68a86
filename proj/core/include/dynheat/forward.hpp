#pragma once

#include <vector>

#include "dynheat/field.hpp"
#include "dynheat/grid.hpp"
#include "dynheat/problem.hpp"
#include "dynheat/stepper.hpp"

namespace dynheat {

/// Snapshots of the state at every time node, states[k] ≈ Y(t_k, ·).
struct Trajectory {
    std::vector<ProductState> states;

    const ProductState& final_state() const { return states.back(); }
};

/// Solve the direct problem for the interior source f (modulated by the
/// setup's r) plus any boundary sources in the setup. Throws SolverError if
/// the march produces non-finite values.
Trajectory solve_forward(const ProblemSetup& setup, const SpaceSource& f,
                         const Grids& grids);

/// Forward solve restricted to the mirrored-flux family; only verification
/// fixtures should need this.
Trajectory solve_forward_oriented(const ProblemSetup& setup, const SpaceSource& f,
                                  const Grids& grids, FluxOrientation orientation);

/// Discrete check of the integral identity
///   d/dt [ ∫₀^ℓ y dx + y(t,0) + y(t,ℓ) ] = ∫₀^ℓ f r dx     (a ≡ 0, b = 0, g = 0)
/// Returns the max over steps of |ΔQ − (Δt/2)(∫f r(t_k) + ∫f r(t_{k+1}))|
/// normalized by max(1, |∫y|). Preconditions violated → std::invalid_argument.
double conservation_residual(const Trajectory& traj, const ProblemSetup& setup,
                             const SpaceSource& f, const Grids& grids);

/// Both sides of the Gronwall energy estimate: lhs = max_t ‖Y(t,f₁)−Y(t,f₂)‖²,
/// rhs = e^{(1+2 max(‖a‖∞,‖b‖∞)) T} ‖(f₁−f₂) r‖²_{L²((0,T)×(0,ℓ))}.
struct StabilityGap {
    double lhs;
    double rhs;
};

StabilityGap stability_gap(const ProblemSetup& setup, const SpaceSource& f1,
                           const SpaceSource& f2, const Grids& grids);

/// ‖f·r‖ over (0,T)×(0,ℓ) (trapezoid in both variables; no boundary masses).
double modulated_source_norm(const ProblemSetup& setup, const SpaceSource& f,
                             const Grids& grids);

}  // namespace dynheat
