#include "dynheat/problem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dynheat {

ProblemSetup ProblemSetup::sample(const Grids& grids, const ProblemFunctions& fns) {
    if (!(fns.d > 0.0))
        throw std::invalid_argument("ProblemSetup: diffusion coefficient must be positive");
    const auto& sg = grids.space;
    const auto& tg = grids.time;

    ProblemSetup s;
    s.d_ = fns.d;
    s.b_left_ = fns.b_left;
    s.b_right_ = fns.b_right;
    s.n_nodes_ = sg.n_nodes();
    s.n_steps_ = tg.n_steps();

    s.a_.resize(sg.n_nodes(), 0.0);
    if (fns.a)
        for (std::size_t i = 0; i < sg.n_nodes(); ++i) s.a_[i] = fns.a(sg.node(i));

    s.r_.resize((tg.n_steps() + 1) * sg.n_nodes(), 1.0);
    if (fns.r)
        for (std::size_t k = 0; k <= tg.n_steps(); ++k)
            for (std::size_t i = 0; i < sg.n_nodes(); ++i)
                s.r_[k * sg.n_nodes() + i] = fns.r(tg.t(k), sg.node(i));

    s.y0_ = fns.y0 ? sampled_state(sg, fns.y0) : ProductState(sg.n_nodes(), 0.0);

    if (fns.g_left || fns.g_right) {
        BoundarySourcePair g;
        g.left.resize(tg.n_steps() + 1, 0.0);
        g.right.resize(tg.n_steps() + 1, 0.0);
        for (std::size_t k = 0; k <= tg.n_steps(); ++k) {
            if (fns.g_left) g.left[k] = fns.g_left(tg.t(k));
            if (fns.g_right) g.right[k] = fns.g_right(tg.t(k));
        }
        s.boundary_source_ = std::move(g);
    }
    return s;
}

ProblemSetup ProblemSetup::basic(const Grids& grids) {
    return sample(grids, ProblemFunctions{});
}

double ProblemSetup::a_inf_norm() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
}

double ProblemSetup::b_inf_norm() const {
    return std::max(std::abs(b_left_), std::abs(b_right_));
}

bool ProblemSetup::is_conservative() const {
    return a_inf_norm() == 0.0 && b_inf_norm() == 0.0 && !boundary_source_;
}

ProblemSetup ProblemSetup::with_zero_data() const {
    ProblemSetup s = *this;
    s.y0_ = ProductState(n_nodes_, 0.0);
    s.boundary_source_.reset();
    return s;
}

ProblemSetup ProblemSetup::with_initial_state(const ProductState& y0) const {
    if (y0.size() != n_nodes_)
        throw std::invalid_argument("ProblemSetup: initial state has incompatible grid");
    ProblemSetup s = *this;
    s.y0_ = y0;
    s.boundary_source_.reset();
    return s;
}

void ProblemSetup::validate(const Grids& grids) const {
    const std::size_t nn = grids.space.n_nodes();
    const std::size_t ns = grids.time.n_steps();
    if (n_nodes_ != nn || a_.size() != nn || y0_.size() != nn ||
        r_.size() != (ns + 1) * nn ||
        (boundary_source_ && boundary_source_->left.size() != ns + 1))
        throw std::invalid_argument(
            "ProblemSetup: incompatible grids (sampled for " +
            std::to_string(n_nodes_) + " nodes / " + std::to_string(n_steps_) +
            " steps, called with " + std::to_string(nn) + " / " +
            std::to_string(ns) + ")");
}

}  // namespace dynheat
