#pragma once

#include <optional>

#include "dynheat/adjoint.hpp"
#include "dynheat/field.hpp"
#include "dynheat/forward.hpp"
#include "dynheat/grid.hpp"
#include "dynheat/observation.hpp"
#include "dynheat/problem.hpp"

namespace dynheat {

struct TikhonovConfig {
    double epsilon = 1e-6;                    // regularization weight, >= 0
    std::optional<double> admissible_radius;  // monitored, never enforced
};

/// J'_ε(f): the spatial gradient field, plus — when the setup carries boundary
/// sources — the boundary adjoint traces φ(·,0), φ(·,ℓ), which are the
/// gradient with respect to the boundary source pair.
struct GradientField {
    SpaceSource values;
    std::optional<BoundarySourcePair> general_boundary;
};

/// J_ε(f) = ½‖Y(T,·,f) − Y_T^δ‖²_{L²×ℝ²} + (ε/2)‖f‖²_{L²}.
double evaluate(const ProblemSetup& setup, const SpaceSource& f,
                const Observation& obs, const TikhonovConfig& cfg,
                const Grids& grids);

/// Adjoint-based gradient J'_ε(f)(x) = ∫₀^T φ(t,x) r(t,x) dt + ε f(x);
/// runs the forward and adjoint solves internally.
GradientField gradient(const ProblemSetup& setup, const SpaceSource& f,
                       const Observation& obs, const TikhonovConfig& cfg,
                       const Grids& grids);

/// Same formula evaluated on an already-computed adjoint trajectory
/// (trapezoid in time on the stored snapshots; no re-solving).
GradientField gradient_from_adjoint(const AdjointTrajectory& phi,
                                    const ProblemSetup& setup,
                                    const SpaceSource& f,
                                    const TikhonovConfig& cfg,
                                    const Grids& grids);

/// Closed-form Lipschitz constant of J': L = √(2T e^{(1+4 max(‖a‖∞,‖b‖∞)) T}).
double lipschitz_constant(const ProblemSetup& setup, const Grids& grids);

/// Both sides of the gradient monotonicity identity
///   ⟨J'_ε(f+δf) − J'_ε(f), δf⟩_{L²(0,ℓ)} = ‖δY(T)‖²_{L²×ℝ²} + ε‖δf‖²_{L²}.
/// (The identity is exact in the continuum; discretely the gap is the
/// adjoint-consistency error.)
struct MonotonicityGap {
    double lhs;
    double rhs;

    double relative_gap() const;
};

MonotonicityGap monotonicity_gap(const ProblemSetup& setup, const SpaceSource& f,
                                 const SpaceSource& df, const Observation& obs,
                                 const TikhonovConfig& cfg, const Grids& grids);

}  // namespace dynheat
