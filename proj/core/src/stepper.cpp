#include "dynheat/stepper.hpp"

#include <stdexcept>

namespace dynheat {

CornerTridiagonalSolver CrankNicolsonStepper::factor(const ProblemSetup& setup,
                                                     const Grids& grids,
                                                     double sigma) {
    setup.validate(grids);
    const std::size_t n = grids.space.n_nodes();
    const double dx = grids.space.dx();
    const double dt = grids.time.dt();
    const double d = setup.d();
    const double mu = d * dt / (2.0 * dx * dx);
    const double c = sigma * d * dt / (4.0 * dx);   // (dt/2) * sigma * d/(2 dx)

    std::vector<double> lo(n, 0.0), di(n, 0.0), up(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        lo[i] = -mu;
        di[i] = 1.0 + 2.0 * mu + (dt / 2.0) * setup.a()[i];
        up[i] = -mu;
    }
    di[0] = 1.0 + 3.0 * c + (dt / 2.0) * setup.b_left();
    up[0] = -4.0 * c;
    di[n - 1] = 1.0 + 3.0 * c + (dt / 2.0) * setup.b_right();
    lo[n - 1] = -4.0 * c;
    return CornerTridiagonalSolver(std::move(lo), std::move(di), std::move(up),
                                   /*corner_top=*/c, /*corner_bottom=*/c);
}

CrankNicolsonStepper::CrankNicolsonStepper(const ProblemSetup& setup,
                                           const Grids& grids,
                                           FluxOrientation orientation)
    : n_nodes_(grids.space.n_nodes()),
      dx_(grids.space.dx()),
      dt_(grids.time.dt()),
      d_(setup.d()),
      sigma_(orientation == FluxOrientation::standard ? 1.0 : -1.0),
      b_left_(setup.b_left()),
      b_right_(setup.b_right()),
      a_(setup.a()),
      solver_(factor(setup, grids, sigma_)) {}

void CrankNicolsonStepper::apply_generator(std::span<const double> y,
                                           std::span<double> out) const {
    const std::size_t n = n_nodes_;
    const double inv_dx2 = 1.0 / (dx_ * dx_);
    for (std::size_t i = 1; i + 1 < n; ++i)
        out[i] = d_ * (y[i - 1] - 2.0 * y[i] + y[i + 1]) * inv_dx2 - a_[i] * y[i];
    out[0] = sigma_ * d_ * (-3.0 * y[0] + 4.0 * y[1] - y[2]) / (2.0 * dx_) -
             b_left_ * y[0];
    out[n - 1] = sigma_ * d_ *
                     (-3.0 * y[n - 1] + 4.0 * y[n - 2] - y[n - 3]) / (2.0 * dx_) -
                 b_right_ * y[n - 1];
}

void CrankNicolsonStepper::advance(std::span<const double> y,
                                   std::span<const double> s0,
                                   std::span<const double> s1,
                                   std::span<double> out) const {
    const std::size_t n = n_nodes_;
    if (y.size() != n || out.size() != n)
        throw std::invalid_argument("CrankNicolsonStepper: state size mismatch");
    apply_generator(y, out);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = y[i] + (dt_ / 2.0) * (out[i] + s0[i] + s1[i]);
    solver_.solve(out);
}

}  // namespace dynheat
