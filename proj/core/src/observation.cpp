#include "dynheat/observation.hpp"

#include "dynheat/forward.hpp"
#include "dynheat/landweber.hpp"

#include <stdexcept>

namespace dynheat {

Observation make_observation(const ProblemSetup& setup, const SpaceSource& f_true,
                             double p, std::uint64_t seed, NoiseMode mode,
                             const Grids& grids) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("make_observation: noise level must lie in [0,1]");

    const Trajectory traj = solve_forward(setup, f_true, grids);
    ProductState data = traj.final_state();

    if (p > 0.0) {
        const double scale = p * product_norm(data, grids.space);
        std::mt19937_64 rng(seed);
        switch (mode) {
            case NoiseMode::zero_mean:
                for (std::size_t i = 0; i < data.size(); ++i)
                    data[i] += scale * (2.0 * uniform01(rng) - 1.0);
                break;
            case NoiseMode::paper_per_node:
                for (std::size_t i = 0; i < data.size(); ++i)
                    data[i] += scale * uniform01(rng);
                break;
            case NoiseMode::paper_scalar: {
                const double shift = scale * uniform01(rng);
                for (std::size_t i = 0; i < data.size(); ++i) data[i] += shift;
                break;
            }
        }
    }
    return Observation{std::move(data), p, seed, mode};
}

}  // namespace dynheat
