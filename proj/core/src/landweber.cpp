#include "dynheat/landweber.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dynheat/adjoint.hpp"
#include "dynheat/errors.hpp"
#include "dynheat/forward.hpp"

namespace dynheat {

const char* to_string(StopReason r) {
    switch (r) {
        case StopReason::threshold: return "threshold";
        case StopReason::cap: return "cap";
        case StopReason::stagnation: return "stagnation";
    }
    return "unknown";
}

const char* to_string(StepMode m) {
    return m == StepMode::adaptive ? "adaptive" : "fixed";
}

double relaxation_alpha(const ProblemSetup& setup, const SpaceSource& p_k,
                        const Grids& grids) {
    const double num = l2_space_norm(p_k, grids.space);
    if (num == 0.0)
        throw std::invalid_argument("relaxation_alpha: descent direction is zero");
    const Trajectory psi = solve_forward(setup.with_zero_data(), p_k, grids);
    const double den =
        product_inner(psi.final_state(), psi.final_state(), grids.space);
    if (den == 0.0)
        throw std::invalid_argument(
            "relaxation_alpha: direction lies in the null space of the "
            "input-output operator (stagnation)");
    return num * num / den;
}

ErrorMetrics error_metrics(const SpaceSource& f_k,
                           const std::optional<SpaceSource>& f_true,
                           const ProductState& obs_clean,
                           const ProblemSetup& setup, const Grids& grids) {
    const Trajectory traj = solve_forward(setup, f_k, grids);
    const ProductState diff = state_difference(traj.final_state(), obs_clean);
    ErrorMetrics m;
    m.e = product_inner(diff, diff, grids.space);
    if (f_true)
        m.E = l2_space_norm(source_difference(*f_true, f_k), grids.space);
    return m;
}

ReconstructionTrace run(const ProblemSetup& setup, const Observation& obs,
                        const LandweberConfig& cfg,
                        const std::optional<SpaceSource>& truth,
                        const Grids& grids) {
    if (!(cfg.e_J > 0.0))
        throw std::invalid_argument("LandweberConfig: e_J must be positive");
    if (cfg.max_iter < 1)
        throw std::invalid_argument("LandweberConfig: max_iter must be >= 1");
    if (cfg.step_mode == StepMode::fixed && !(cfg.fixed_alpha > 0.0))
        throw std::invalid_argument("LandweberConfig: fixed step needs alpha > 0");

    const auto& sg = grids.space;
    const double eps = cfg.tikhonov.epsilon;

    // e(k) is measured against the noise-free output when the truth is known.
    const ProductState obs_clean =
        truth ? solve_forward(setup, *truth, grids).final_state() : obs.data;

    ReconstructionTrace trace;
    trace.step_mode = cfg.step_mode;
    trace.grid = sg;

    SpaceSource f = cfg.f0;
    double j_prev = 0.0;
    constexpr double kStagnationTol = 1e-14;

    for (std::size_t k = 0;; ++k) try {
        const Trajectory traj = solve_forward(setup, f, grids);
        const TerminalResidual res = terminal_residual(traj, obs.data, sg);
        const double fnorm = l2_space_norm(f, sg);
        const double J =
            0.5 * product_inner(res.residual, res.residual, sg) +
            0.5 * eps * fnorm * fnorm;

        TraceRow row;
        row.k = k;
        row.J = J;
        const ProductState clean_diff =
            state_difference(traj.final_state(), obs_clean);
        row.e = product_inner(clean_diff, clean_diff, sg);
        if (truth) row.E = l2_space_norm(source_difference(*truth, f), sg);

        if (cfg.tikhonov.admissible_radius && !trace.radius_exceeded_at &&
            fnorm > *cfg.tikhonov.admissible_radius)
            trace.radius_exceeded_at = k;

        trace.iterates.push_back(f);

        if (J < cfg.e_J) {
            trace.rows.push_back(row);
            trace.stop_reason = StopReason::threshold;
            break;
        }
        if (k == cfg.max_iter) {
            trace.rows.push_back(row);
            trace.stop_reason = StopReason::cap;
            break;
        }
        if (k > 0 && (j_prev - J) < kStagnationTol * std::max(j_prev, 1e-300)) {
            trace.rows.push_back(row);
            trace.stop_reason = StopReason::stagnation;
            break;
        }

        const AdjointTrajectory phi = solve_adjoint(setup, res, grids);
        const GradientField p =
            gradient_from_adjoint(phi, setup, f, cfg.tikhonov, grids);
        row.grad_norm = l2_space_norm(p.values, sg);

        const double alpha = cfg.step_mode == StepMode::fixed
                                 ? cfg.fixed_alpha
                                 : relaxation_alpha(setup, p.values, grids);
        row.alpha = alpha;
        trace.rows.push_back(row);

        f = source_axpy(f, -alpha, p.values);
        j_prev = J;
    } catch (const SolverError& e) {
        throw SolverError("landweber iteration " + std::to_string(k) + ": " +
                              e.what(),
                          e.step());
    }

    trace.final = trace.iterates.back();
    return trace;
}

RateReport rate_bound_check(const ReconstructionTrace& trace, double L) {
    if (trace.step_mode != StepMode::fixed)
        throw std::invalid_argument(
            "rate_bound_check: requires a fixed-step trace (alpha = 1/L)");
    if (!(L > 0.0))
        throw std::invalid_argument("rate_bound_check: L must be positive");

    const auto& rows = trace.rows;
    const auto& its = trace.iterates;
    const SpatialGrid& grid = trace.grid;

    RateReport report;
    report.J_star = rows.back().J;
    for (const auto& fk : its)
        report.beta = std::max(
            report.beta, l2_space_norm(source_difference(fk, its.back()), grid));

    // tiny relative slack for floating-point accumulation
    constexpr double kSlack = 1e-9;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        RateCheckRow rc{rows[k].k, true, true};
        if (k + 1 < rows.size()) {
            const double step =
                l2_space_norm(source_difference(its[k + 1], its[k]), grid);
            const double decrease = rows[k].J - rows[k + 1].J;
            rc.step_inequality_ok =
                step * step <= (2.0 / L) * decrease * (1.0 + kSlack) + 1e-300;
        }
        if (rows[k].k >= 1) {
            const double bound =
                2.0 * L * report.beta * report.beta / static_cast<double>(rows[k].k);
            const double gap = rows[k].J - report.J_star;
            rc.rate_bound_ok = gap >= -kSlack * std::abs(report.J_star) - 1e-300 &&
                               gap <= bound * (1.0 + kSlack) + 1e-300;
        }
        report.all_pass =
            report.all_pass && rc.step_inequality_ok && rc.rate_bound_ok;
        report.rows.push_back(rc);
    }
    return report;
}

}  // namespace dynheat
