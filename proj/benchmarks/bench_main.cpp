#include <benchmark/benchmark.h>

#include <random>

#include "dynheat/adjoint.hpp"
#include "dynheat/forward.hpp"
#include "dynheat/landweber.hpp"
#include "dynheat/objective.hpp"

using namespace dynheat;

namespace {

Grids make(std::size_t n) { return Grids{SpatialGrid(1.0, n), TimeGrid(1.0, 2 * n)}; }

SpaceSource parabolic(const SpatialGrid& g) {
    return sampled_source(g, [](double x) { return x * (1.0 - x); });
}

void BM_SolveForward(benchmark::State& state) {
    const Grids g = make(static_cast<std::size_t>(state.range(0)));
    const auto setup = ProblemSetup::basic(g);
    const auto f = parabolic(g.space);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_forward(setup, f, g));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveForward)->Arg(64)->Arg(256)->Arg(1024)->Complexity();

void BM_SolveAdjoint(benchmark::State& state) {
    const Grids g = make(static_cast<std::size_t>(state.range(0)));
    const auto setup = ProblemSetup::basic(g);
    const auto res = solve_forward(setup, parabolic(g.space), g).final_state();
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_adjoint(setup, {res}, g));
    }
}
BENCHMARK(BM_SolveAdjoint)->Arg(256);

void BM_Gradient(benchmark::State& state) {
    const Grids g = make(256);
    const auto setup = ProblemSetup::basic(g);
    const auto truth = parabolic(g.space);
    const Observation obs =
        make_observation(setup, truth, 0.01, 1, NoiseMode::zero_mean, g);
    const SpaceSource f(g.space.n_nodes(), 0.0);
    const TikhonovConfig cfg{1e-6, std::nullopt};
    for (auto _ : state) {
        benchmark::DoNotOptimize(gradient(setup, f, obs, cfg, g));
    }
}
BENCHMARK(BM_Gradient);

void BM_LandweberIteration(benchmark::State& state) {
    const Grids g = make(256);
    const auto setup = ProblemSetup::basic(g);
    const auto truth = parabolic(g.space);
    const Observation obs =
        make_observation(setup, truth, 0.01, 1, NoiseMode::zero_mean, g);
    LandweberConfig cfg;
    cfg.f0 = SpaceSource(g.space.n_nodes(), 0.0);
    cfg.e_J = 1e-300;  // never reached: benchmark a fixed iteration count
    cfg.max_iter = 1;
    cfg.tikhonov.epsilon = 1e-6;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run(setup, obs, cfg, std::nullopt, g));
    }
}
BENCHMARK(BM_LandweberIteration);

void BM_ProductInner(benchmark::State& state) {
    const SpatialGrid grid(1.0, 1024);
    const auto u = sampled_state(grid, [](double x) { return std::sin(3 * x); });
    for (auto _ : state) {
        benchmark::DoNotOptimize(product_inner(u, u, grid));
    }
}
BENCHMARK(BM_ProductInner);

}  // namespace

BENCHMARK_MAIN();
