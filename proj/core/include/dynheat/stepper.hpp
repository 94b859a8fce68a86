#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dynheat/grid.hpp"
#include "dynheat/problem.hpp"
#include "dynheat/tridiagonal.hpp"

namespace dynheat {

/// Orientation of the boundary flux terms in the dynamic boundary ODEs.
/// `standard` is the physical family (used by both the direct solver and the
/// time-reversed adjoint solver, whose reversal lands on the same signs).
/// `mirrored` flips the flux signs; it exists for verification fixtures that
/// need a deliberately wrong adjoint.
enum class FluxOrientation { standard, mirrored };

/// Crank–Nicolson stepper for the method-of-lines system dY/dt = M Y + s(t):
///   interior rows  (M Y)_i = d (Y_{i-1} − 2Y_i + Y_{i+1})/Δx² − a_i Y_i
///   row 0          (M Y)_0 = σ d (−3Y_0 + 4Y_1 − Y_2)/(2Δx) − b_L Y_0
///   row N          (M Y)_N = σ d (−3Y_N + 4Y_{N-1} − Y_{N-2})/(2Δx) − b_R Y_N
/// with σ the flux orientation. The endpoint nodes are the boundary degrees
/// of freedom themselves. Each step solves
///   (I − Δt/2 M) Y^{k+1} = Y^k + Δt/2 (M Y^k) + Δt/2 (s_k + s_{k+1});
/// the matrix is tridiagonal plus the two one-sided corner entries and is
/// factored once per stepper.
class CrankNicolsonStepper {
public:
    CrankNicolsonStepper(const ProblemSetup& setup, const Grids& grids,
                         FluxOrientation orientation = FluxOrientation::standard);

    /// out = M y (explicit stencil application).
    void apply_generator(std::span<const double> y, std::span<double> out) const;

    /// One Crank–Nicolson step; s0, s1 are the source vectors at t_k, t_{k+1}.
    void advance(std::span<const double> y, std::span<const double> s0,
                 std::span<const double> s1, std::span<double> out) const;

    std::size_t n_nodes() const { return n_nodes_; }

private:
    std::size_t n_nodes_;
    double dx_;
    double dt_;
    double d_;
    double sigma_;
    double b_left_;
    double b_right_;
    std::vector<double> a_;
    CornerTridiagonalSolver solver_;

    static CornerTridiagonalSolver factor(const ProblemSetup& setup,
                                          const Grids& grids, double sigma);
};

}  // namespace dynheat
