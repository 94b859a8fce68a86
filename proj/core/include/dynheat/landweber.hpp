#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dynheat/field.hpp"
#include "dynheat/grid.hpp"
#include "dynheat/objective.hpp"
#include "dynheat/observation.hpp"
#include "dynheat/problem.hpp"

namespace dynheat {

/// Generate the noisy terminal measurement Y_T^δ = Y_T + p·‖Y_T‖·ξ from the
/// true source (Y_T includes the initial-data contribution). ξ is drawn per
/// NoiseMode from a seeded mt19937_64; identical inputs give bit-identical
/// output. p outside [0,1] → std::invalid_argument.
Observation make_observation(const ProblemSetup& setup, const SpaceSource& f_true,
                             double p, std::uint64_t seed, NoiseMode mode,
                             const Grids& grids);

/// Relaxation parameter α = ‖p‖²_{L²(0,ℓ)} / ‖Ψp‖²_{L²×ℝ²} with Ψ the
/// zero-initial-data input-output map driven by the source p(x)r(t,x).
/// Throws std::invalid_argument when Ψp vanishes while p does not
/// (a null-space direction: the iteration would stagnate).
double relaxation_alpha(const ProblemSetup& setup, const SpaceSource& p_k,
                        const Grids& grids);

enum class StepMode { adaptive, fixed };
enum class StopReason { threshold, cap, stagnation };

const char* to_string(StopReason r);
const char* to_string(StepMode m);

struct LandweberConfig {
    SpaceSource f0;
    double e_J = 1e-6;             // stop when J_ε(f_k) < e_J
    std::size_t max_iter = 1000;
    StepMode step_mode = StepMode::adaptive;
    double fixed_alpha = 0.0;      // used when step_mode == fixed
    TikhonovConfig tikhonov;
};

/// One row per iteration. alpha and grad_norm are absent on the stopping row
/// (the iteration ends before computing a descent direction); E is absent
/// when no truth was supplied.
struct TraceRow {
    std::size_t k = 0;
    std::optional<double> alpha;
    double J = 0.0;
    double e = 0.0;
    std::optional<double> E;
    std::optional<double> grad_norm;
};

struct ReconstructionTrace {
    std::vector<TraceRow> rows;
    std::vector<SpaceSource> iterates;   // f_k for every recorded row
    SpaceSource final;
    StopReason stop_reason = StopReason::cap;
    StepMode step_mode = StepMode::adaptive;
    std::optional<std::size_t> radius_exceeded_at;
    SpatialGrid grid{1.0, 4};

    std::size_t stop_iteration() const { return rows.back().k; }
};

/// Landweber iteration f_{k+1} = f_k − α_k J'_ε(f_k) with the adaptive
/// relaxation parameter (or a fixed step), stopping on J_ε(f_k) < e_J, the
/// iteration cap, or relative J-decrease below 1e−14 (stagnation guard).
/// When truth is supplied, e(k) is measured against the noise-free output of
/// the truth and E(k) = ‖f_true − f_k‖ is recorded; otherwise e(k) falls back
/// to the supplied (noisy) observation.
ReconstructionTrace run(const ProblemSetup& setup, const Observation& obs,
                        const LandweberConfig& cfg,
                        const std::optional<SpaceSource>& truth,
                        const Grids& grids);

/// e(k) = ‖Y(T,·,f_k) − Y_T‖²_{L²×ℝ²} against the noise-free output, and
/// E(k) = ‖f_true − f_k‖_{L²} when the truth is given.
struct ErrorMetrics {
    double e;
    std::optional<double> E;
};

ErrorMetrics error_metrics(const SpaceSource& f_k,
                           const std::optional<SpaceSource>& f_true,
                           const ProductState& obs_clean,
                           const ProblemSetup& setup, const Grids& grids);

/// Row-by-row verification of the fixed-step (α = 1/L) descent inequalities:
///   (i)  ‖f_{k+1} − f_k‖² ≤ (2/L)[J(f_k) − J(f_{k+1})]
///   (ii) J(f_k) − J_* ≤ 2 L β²/k,  k ≥ 1
/// with J_* the final J of the trace and β = max_k ‖f_k − f_final‖ (an
/// observable surrogate for the quasi-solution-set diameter). Traces from
/// adaptive runs are rejected with std::invalid_argument.
struct RateCheckRow {
    std::size_t k;
    bool step_inequality_ok;   // (i), vacuously true on the last row
    bool rate_bound_ok;        // (ii), vacuously true at k = 0
};

struct RateReport {
    std::vector<RateCheckRow> rows;
    bool all_pass = true;
    double beta = 0.0;
    double J_star = 0.0;
};

RateReport rate_bound_check(const ReconstructionTrace& trace, double L);

}  // namespace dynheat
