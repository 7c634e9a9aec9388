#pragma once

#include <cstdint>

#include "gcdel/bitstring.hpp"

namespace gcdel {

/// Varshamov-Tenengolts syndrome of a length-L string: sum of i*x_i over
/// 1-based positions, mod (L+1).
struct VtSyndrome {
    std::uint64_t value = 0;
    std::size_t length = 0; ///< L, the length the syndrome was computed for
};

VtSyndrome vt_syndrome(const BitString& x);

/// Recover x from y = x minus one deleted bit, given the syndrome of x.
/// With w = weight(y) and deficiency d = (s - syndrome(y)) mod (L+1):
/// d <= w reinserts a 0 with exactly d ones to its right, otherwise a 1
/// with exactly d-w-1 zeros to its left. Throws ArgumentError when
/// |y| + 1 != s.length or the syndrome value is out of range.
BitString vt_repair(const BitString& y, const VtSyndrome& s);

} // namespace gcdel
