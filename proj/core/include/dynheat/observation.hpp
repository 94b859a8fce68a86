#pragma once

#include <cstdint>
#include <random>

#include "dynheat/field.hpp"

namespace dynheat {

/// How the noisy terminal data Y_T^δ = Y_T + p·‖Y_T‖·ξ is drawn.
///   zero_mean      ξ i.i.d. uniform[−1,1] per node (default)
///   paper_per_node ξ i.i.d. uniform[0,1] per node
///   paper_scalar   ξ a single uniform[0,1] draw applied to every node,
///                  i.e. a constant shift of the data
enum class NoiseMode { zero_mean, paper_per_node, paper_scalar };

/// Final-time measurement with its noise parameters. `data` keeps the
/// structural trace coupling because noise is applied node-wise to the
/// single storage.
struct Observation {
    ProductState data;
    double noise_pct = 0.0;
    std::uint64_t seed = 0;
    NoiseMode mode = NoiseMode::zero_mean;
};

/// Portable uniform draw in [0,1): top 53 bits of an mt19937_64 word. Used
/// instead of std::uniform_real_distribution, whose stream is not pinned by
/// the standard; this mapping is bit-reproducible across platforms.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace dynheat
