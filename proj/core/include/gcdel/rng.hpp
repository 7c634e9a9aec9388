#pragma once

#include <cstdint>
#include <vector>

#include "gcdel/bitstring.hpp"

namespace gcdel {

/// Deterministic 64-bit generator (splitmix64). Each Monte Carlo trial or
/// sync run gets its own stream derived from (master_seed, trial index) so
/// results do not depend on worker count or scheduling:
///
///   state0 = mix64(master_seed + (index + 1) * 0x9E3779B97F4A7C15)
///
/// where mix64 is the splitmix64 output permutation. The stream then
/// advances by the golden-ratio increment as usual.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static Rng for_trial(std::uint64_t master_seed, std::uint64_t trial_index);

    std::uint64_t next_u64();

    /// Uniform in [0, bound), unbiased (mask-and-reject). bound >= 1.
    std::uint64_t below(std::uint64_t bound);

    std::uint8_t next_bit() { return static_cast<std::uint8_t>(next_u64() >> 63); }

    BitString random_bits(std::size_t n);

    /// Uniformly random set of `count` distinct 1-based positions in
    /// [1, L], returned sorted (Floyd's sampling). Throws ArgumentError
    /// when count > L.
    std::vector<std::size_t> sample_deletion_positions(std::size_t L, std::size_t count);

private:
    std::uint64_t state_;
};

} // namespace gcdel
