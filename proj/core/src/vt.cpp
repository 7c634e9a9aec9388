#include "gcdel/vt.hpp"

#include "gcdel/errors.hpp"

namespace gcdel {

VtSyndrome vt_syndrome(const BitString& x) {
    const std::uint64_t mod = x.size() + 1;
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) acc = (acc + (i + 1)) % mod;
    return VtSyndrome{acc, x.size()};
}

BitString vt_repair(const BitString& y, const VtSyndrome& s) {
    const std::size_t L = s.length;
    if (y.size() + 1 != L)
        throw ArgumentError("vt_repair: |y| + 1 must equal the syndrome length");
    if (s.value > L)
        throw ArgumentError("vt_repair: syndrome value out of range");

    // weighted sum of y reduced mod (L+1), the modulus of the full-length code
    const std::uint64_t mod = L + 1;
    std::uint64_t synY = 0;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (y[i]) synY = (synY + (i + 1)) % mod;
    const std::uint64_t w = y.weight();
    const std::uint64_t def = (s.value + mod - synY) % mod;

    BitString x;
    if (def <= w) {
        // reinsert a 0 with exactly `def` ones to its right
        std::uint64_t onesRight = 0;
        std::size_t pos = y.size(); // insertion index (bits [pos..) shift right)
        while (onesRight < def) {
            --pos;
            onesRight += y[pos];
        }
        x = y.slice(0, pos);
        x.push_back(0);
        x.append(y.slice(pos, y.size() - pos));
    } else {
        // reinsert a 1 with exactly def - w - 1 zeros to its left
        const std::uint64_t zerosLeft = def - w - 1;
        std::uint64_t zeros = 0;
        std::size_t pos = 0;
        while (zeros < zerosLeft) {
            zeros += y[pos] == 0 ? 1u : 0u;
            ++pos;
        }
        x = y.slice(0, pos);
        x.push_back(1);
        x.append(y.slice(pos, y.size() - pos));
    }
    return x;
}

} // namespace gcdel
