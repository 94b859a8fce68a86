#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "dynheat/landweber.hpp"
#include "dynheat/objective.hpp"
#include "helpers.hpp"

using namespace dynheat;
using namespace dynheat::testing;

namespace {

/// Central finite difference of J along df with an h-sweep: the value is taken
/// where consecutive h give the most stable estimate.
double fd_directional(const ProblemSetup& setup, const SpaceSource& f,
                      const SpaceSource& df, const Observation& obs,
                      const TikhonovConfig& cfg, const Grids& grids) {
    const double hs[] = {1e-2, 1e-3, 1e-4, 1e-5};
    double vals[4];
    for (int i = 0; i < 4; ++i) {
        const double h = hs[i];
        const double jp = evaluate(setup, source_axpy(f, h, df), obs, cfg, grids);
        const double jm = evaluate(setup, source_axpy(f, -h, df), obs, cfg, grids);
        vals[i] = (jp - jm) / (2.0 * h);
    }
    int best = 0;
    double best_diff = std::abs(vals[1] - vals[0]);
    for (int i = 1; i < 3; ++i) {
        const double d = std::abs(vals[i + 1] - vals[i]);
        if (d < best_diff) {
            best_diff = d;
            best = i;
        }
    }
    return vals[best + 1];
}

}  // namespace

TEST_CASE("evaluate: exact data and constant-residual closed forms") {
    const Grids g = unit_grids(64, 32);
    const auto setup = ProblemSetup::basic(g);
    const auto f = parabolic_source(g.space);

    Observation exact;
    exact.data = solve_forward(setup, f, g).final_state();

    CHECK(evaluate(setup, f, exact, {0.0, std::nullopt}, g) == 0.0);

    // only the regularization term survives on exact data
    const double reg = l2_space_norm(f, g.space);
    CHECK(evaluate(setup, f, exact, {1e-6, std::nullopt}, g) ==
          doctest::Approx(0.5e-6 * reg * reg).epsilon(1e-12));
    CHECK(0.5e-6 * reg * reg == doctest::Approx(5e-7 / 30.0).epsilon(1e-4));

    Observation ones;
    ones.data = ProductState(g.space.n_nodes(), 1.0);
    CHECK(evaluate(setup, SpaceSource(g.space.n_nodes(), 0.0), ones,
                   {0.0, std::nullopt}, g) ==
          doctest::Approx(1.5).epsilon(1e-13));
}

TEST_CASE("gradient: exact data cases") {
    const Grids g = unit_grids(64, 32);
    const auto setup = ProblemSetup::basic(g);
    const auto f = parabolic_source(g.space);
    Observation exact;
    exact.data = solve_forward(setup, f, g).final_state();

    const auto g0 = gradient(setup, f, exact, {0.0, std::nullopt}, g);
    for (double v : g0.values.values) CHECK(v == 0.0);

    // with eps > 0 the gradient is exactly eps*f
    const auto g1 = gradient(setup, f, exact, {1e-4, std::nullopt}, g);
    for (std::size_t i = 0; i < f.size(); ++i)
        CHECK(g1.values[i] == doctest::Approx(1e-4 * f[i]).epsilon(1e-12));
}

TEST_CASE("gradient carries the boundary adjoint traces when boundary sources exist") {
    const Grids g = unit_grids(64, 32);
    ProblemFunctions fns;
    fns.g_left = [](double t) { return t; };
    fns.g_right = [](double t) { return 1.0 - t; };
    const auto setup = ProblemSetup::sample(g, fns);
    const auto truth = parabolic_source(g.space);
    const Observation obs =
        make_observation(setup, truth, 0.0, 1, NoiseMode::zero_mean, g);

    const SpaceSource f0(g.space.n_nodes(), 0.0);
    const auto grad = gradient(setup, f0, obs, {0.0, std::nullopt}, g);
    REQUIRE(grad.general_boundary.has_value());
    REQUIRE(grad.general_boundary->left.size() == g.time.n_steps() + 1);

    // the traces are the adjoint solution at the endpoints
    const auto traj = solve_forward(setup, f0, g);
    const auto phi = solve_adjoint(
        setup, terminal_residual(traj, obs.data, g.space), g);
    for (std::size_t k = 0; k <= g.time.n_steps(); ++k) {
        CHECK(grad.general_boundary->left[k] == phi.states[k].left());
        CHECK(grad.general_boundary->right[k] == phi.states[k].right());
    }

    // no boundary sources -> no boundary gradient component
    const auto plain = ProblemSetup::basic(g);
    const Observation obs2 = make_observation(plain, truth, 0.0, 1,
                                              NoiseMode::zero_mean, g);
    CHECK_FALSE(gradient(plain, f0, obs2, {0.0, std::nullopt}, g)
                    .general_boundary.has_value());
}

TEST_CASE("negative regularization weight is rejected") {
    const Grids g = unit_grids(32, 16);
    const auto setup = ProblemSetup::basic(g);
    Observation obs;
    obs.data = ProductState(g.space.n_nodes(), 0.0);
    CHECK_THROWS_AS(evaluate(setup, SpaceSource(g.space.n_nodes(), 0.0), obs,
                             {-1e-3, std::nullopt}, g),
                    std::invalid_argument);
}

TEST_CASE("gradient matches central finite differences") {
    const Grids g = unit_grids(256, 512);
    const auto setup = ProblemSetup::basic(g);
    const Observation obs = make_observation(setup, parabolic_source(g.space),
                                             0.0, 1, NoiseMode::zero_mean, g);
    const TikhonovConfig cfg{0.0, std::nullopt};

    std::mt19937_64 rng(11);
    for (int t = 0; t < 10; ++t) {
        const auto f = SmoothField::draw(rng).sample(g.space);
        const auto df = SmoothField::draw(rng).sample(g.space);
        const auto grad = gradient(setup, f, obs, cfg, g);
        const double dd_adj = l2_space_inner(grad.values, df, g.space);
        const double dd_fd = fd_directional(setup, f, df, obs, cfg, g);
        CHECK(std::abs(dd_adj - dd_fd) <= 1e-3 * std::abs(dd_fd));
    }
}

TEST_CASE("gradient-FD agreement improves at order >= 1.9") {
    std::mt19937_64 rng(5);
    const auto f_field = SmoothField::draw(rng);
    const auto df_field = SmoothField::draw(rng);
    std::vector<double> errs;
    for (std::size_t n : {64, 128, 256}) {
        const Grids g = unit_grids(n, 2 * n);
        const auto setup = ProblemSetup::basic(g);
        const Observation obs = make_observation(
            setup, parabolic_source(g.space), 0.0, 1, NoiseMode::zero_mean, g);
        const TikhonovConfig cfg{0.0, std::nullopt};
        const auto f = f_field.sample(g.space);
        const auto df = df_field.sample(g.space);
        const auto grad = gradient(setup, f, obs, cfg, g);
        const double dd_adj = l2_space_inner(grad.values, df, g.space);
        const double dd_fd = fd_directional(setup, f, df, obs, cfg, g);
        errs.push_back(std::abs(dd_adj - dd_fd) / std::abs(dd_fd));
    }
    CHECK(observed_order(errs) >= 1.9);
}

TEST_CASE("lipschitz constant closed forms") {
    const Grids g = unit_grids(64, 32);
    CHECK(lipschitz_constant(ProblemSetup::basic(g), g) ==
          doctest::Approx(std::sqrt(2.0 * std::exp(1.0))).epsilon(1e-14));
    CHECK(lipschitz_constant(ProblemSetup::basic(g), g) ==
          doctest::Approx(2.33164).epsilon(1e-5));

    ProblemFunctions fns;
    fns.a = [](double) { return 1.0; };
    CHECK(lipschitz_constant(ProblemSetup::sample(g, fns), g) ==
          doctest::Approx(std::sqrt(2.0 * std::exp(5.0))).epsilon(1e-14));
    CHECK(lipschitz_constant(ProblemSetup::sample(g, fns), g) ==
          doctest::Approx(17.22864).epsilon(1e-5));

    // T -> 0 drives L -> 0
    const Grids tiny{SpatialGrid(1.0, 64), TimeGrid(1e-12, 2)};
    CHECK(lipschitz_constant(ProblemSetup::basic(tiny), tiny) <= 2e-6);
}

TEST_CASE("gradient Lipschitz bound with constant sqrt(T)*L") {
    const Grids g = unit_grids(256, 512);
    const auto setup = ProblemSetup::basic(g);
    const Observation obs = make_observation(setup, parabolic_source(g.space),
                                             0.0, 1, NoiseMode::zero_mean, g);
    const TikhonovConfig cfg{0.0, std::nullopt};
    const double bound_factor =
        std::sqrt(g.time.final_time()) * lipschitz_constant(setup, g);

    std::mt19937_64 rng(17);
    for (int t = 0; t < 20; ++t) {
        const auto f = SmoothField::draw(rng).sample(g.space);
        const auto df = SmoothField::draw(rng).sample(g.space);
        const auto g1 = gradient(setup, f, obs, cfg, g);
        const auto g2 = gradient(setup, source_axpy(f, 1.0, df), obs, cfg, g);
        const double lhs =
            l2_space_norm(source_difference(g2.values, g1.values), g.space);
        const double rhs = bound_factor * modulated_source_norm(setup, df, g);
        CHECK(lhs <= 1.05 * rhs);
    }
}

TEST_CASE("monotonicity identity") {
    const Grids g = unit_grids(256, 512);
    const auto setup = ProblemSetup::basic(g);
    const Observation obs = make_observation(setup, parabolic_source(g.space),
                                             0.0, 1, NoiseMode::zero_mean, g);

    SUBCASE("zero perturbation gives zero on both sides") {
        const auto f = parabolic_source(g.space);
        const auto gap = monotonicity_gap(setup, f,
                                          SpaceSource(g.space.n_nodes(), 0.0),
                                          obs, {0.0, std::nullopt}, g);
        CHECK(gap.lhs == 0.0);
        CHECK(gap.rhs == 0.0);
    }
    SUBCASE("rhs equals ||Psi df||^2 by linearity (y0 = 0, eps = 0)") {
        const auto f = parabolic_source(g.space);
        const auto gap =
            monotonicity_gap(setup, f, f, obs, {0.0, std::nullopt}, g);
        const auto psi = solve_forward(setup, f, g).final_state();
        CHECK(gap.rhs ==
              doctest::Approx(product_inner(psi, psi, g.space)).epsilon(1e-10));
    }
    SUBCASE("identity holds to 1e-3 on random pairs, eps = 0 and eps > 0") {
        std::mt19937_64 rng(13);
        for (int t = 0; t < 20; ++t) {
            const auto f = SmoothField::draw(rng).sample(g.space);
            const auto df = SmoothField::draw(rng).sample(g.space);
            for (double eps : {0.0, 1e-6}) {
                const auto gap =
                    monotonicity_gap(setup, f, df, obs, {eps, std::nullopt}, g);
                CHECK(gap.relative_gap() <= 1e-3);
            }
        }
    }
}

TEST_CASE("objective value refines at order >= 1.9") {
    // J on successively refined grids against the finest level
    std::vector<double> js;
    for (std::size_t n : {64, 128, 256, 512, 2048}) {
        const Grids g = unit_grids(n, 2 * n);
        const auto setup = ProblemSetup::basic(g);
        const auto truth = parabolic_source(g.space);
        const Observation obs =
            make_observation(setup, truth, 0.0, 1, NoiseMode::zero_mean, g);
        SpaceSource f(g.space.n_nodes());
        for (std::size_t i = 0; i < f.size(); ++i) f[i] = 0.7 * truth[i];
        js.push_back(evaluate(setup, f, obs, {1e-6, std::nullopt}, g));
    }
    std::vector<double> errs;
    for (int i = 0; i < 4; ++i) errs.push_back(std::abs(js[i] - js.back()));
    CHECK(observed_order({errs[0], errs[1], errs[2]}) >= 1.9);
}
