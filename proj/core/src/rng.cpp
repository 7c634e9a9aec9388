#include "gcdel/rng.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "gcdel/errors.hpp"

namespace gcdel {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}
} // namespace

Rng Rng::for_trial(std::uint64_t master_seed, std::uint64_t trial_index) {
    return Rng(mix64(master_seed + (trial_index + 1) * kGolden));
}

std::uint64_t Rng::next_u64() {
    state_ += kGolden;
    return mix64(state_);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw ArgumentError("Rng::below: bound must be positive");
    if (bound == 1) return 0;
    const int bits = std::bit_width(bound - 1);
    const std::uint64_t mask = bits >= 64 ? ~0ULL : ((1ULL << bits) - 1);
    for (;;) {
        const std::uint64_t v = next_u64() & mask;
        if (v < bound) return v;
    }
}

BitString Rng::random_bits(std::size_t n) {
    BitString out;
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i % 64 == 0) word = next_u64();
        out.push_back(static_cast<std::uint8_t>((word >> (i % 64)) & 1));
    }
    return out;
}

std::vector<std::size_t> Rng::sample_deletion_positions(std::size_t L, std::size_t count) {
    if (count > L)
        throw ArgumentError("sample_deletion_positions: cannot delete more positions than exist");
    // Floyd's sampling: uniform over all C(L, count) subsets.
    std::set<std::size_t> chosen;
    for (std::size_t j = L - count + 1; j <= L; ++j) {
        const std::size_t t = static_cast<std::size_t>(below(j)) + 1;
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    return {chosen.begin(), chosen.end()};
}

} // namespace gcdel
