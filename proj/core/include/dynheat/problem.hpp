#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "dynheat/field.hpp"
#include "dynheat/grid.hpp"

namespace dynheat {

/// Coefficient callbacks, evaluated once onto the grids by ProblemSetup::sample.
struct ProblemFunctions {
    double d = 1.0;
    double b_left = 0.0;
    double b_right = 0.0;
    std::function<double(double)> a;                 // a(x); null means 0
    std::function<double(double, double)> r;         // r(t,x); null means 1
    std::function<double(double)> y0;                // y0(x); null means 0
    std::function<double(double)> g_left;            // boundary sources; null means absent
    std::function<double(double)> g_right;
};

/// Coefficients and data of the direct problem
///   y_t = d y_xx − a(x) y + f(x) r(t,x)            in (0,T)×(0,ℓ)
///   y_t(t,0) =  d y_x(t,0) − b_left  y(t,0) + g_left(t)
///   y_t(t,ℓ) = −d y_x(t,ℓ) − b_right y(t,ℓ) + g_right(t)
/// with everything sampled on the grids. r is stored row-major,
/// (n_steps+1)×(n_nodes) samples.
class ProblemSetup {
public:
    static ProblemSetup sample(const Grids& grids, const ProblemFunctions& fns);

    /// d=1, a=0, b=0, r≡1, y0≡0 — the setup used by the worked examples.
    static ProblemSetup basic(const Grids& grids);

    double d() const { return d_; }
    const std::vector<double>& a() const { return a_; }
    double b_left() const { return b_left_; }
    double b_right() const { return b_right_; }
    double r(std::size_t step, std::size_t node) const {
        return r_[step * n_nodes_ + node];
    }
    const ProductState& initial_state() const { return y0_; }
    const std::optional<BoundarySourcePair>& boundary_source() const {
        return boundary_source_;
    }

    double a_inf_norm() const;
    double b_inf_norm() const;
    bool is_conservative() const;   // a≡0, b=0, no boundary sources

    /// Same coefficients, zero initial data, no boundary sources — the
    /// configuration the input-output operator Ψ is defined with.
    ProblemSetup with_zero_data() const;

    /// Same coefficients, no boundary sources, initial state replaced — the
    /// configuration the time-reversed adjoint solve marches forward.
    ProblemSetup with_initial_state(const ProductState& y0) const;

    void validate(const Grids& grids) const;

private:
    ProblemSetup() = default;

    double d_ = 1.0;
    double b_left_ = 0.0;
    double b_right_ = 0.0;
    std::vector<double> a_;
    std::vector<double> r_;
    std::size_t n_nodes_ = 0;
    std::size_t n_steps_ = 0;
    ProductState y0_;
    std::optional<BoundarySourcePair> boundary_source_;
};

}  // namespace dynheat
