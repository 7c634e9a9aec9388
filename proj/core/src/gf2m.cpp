#include "gcdel/gf2m.hpp"

#include <array>

#include "gcdel/errors.hpp"

namespace gcdel {

std::uint32_t Field::default_poly(int m) {
    // One primitive polynomial per supported degree, from the usual LFSR
    // tables. All of them are revalidated by the constructor.
    static constexpr std::array<std::uint32_t, 17> table = {
        0, 0,
        0x7,     // x^2+x+1
        0xB,     // x^3+x+1
        0x13,    // x^4+x+1
        0x25,    // x^5+x^2+1
        0x43,    // x^6+x+1
        0x89,    // x^7+x^3+1
        0x11D,   // x^8+x^4+x^3+x^2+1
        0x211,   // x^9+x^4+1
        0x409,   // x^10+x^3+1
        0x805,   // x^11+x^2+1
        0x1053,  // x^12+x^6+x^4+x+1
        0x201B,  // x^13+x^4+x^3+x+1
        0x4443,  // x^14+x^10+x^6+x+1
        0x8003,  // x^15+x+1
        0x1100B, // x^16+x^12+x^3+x+1
    };
    if (m < 2 || m > 16) throw ConfigError("GF(2^m): m must be in [2, 16]");
    return table[static_cast<std::size_t>(m)];
}

Field::Field(int m, std::uint32_t prim_poly) : m_(m) {
    if (m < 2 || m > 16)
        throw ConfigError("GF(2^m): m must be in [2, 16]");
    q_ = 1u << m;
    poly_ = prim_poly == 0 ? default_poly(m) : prim_poly;
    if ((poly_ >> m) != 1u)
        throw ConfigError("GF(2^m): polynomial mask must have degree exactly m");

    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, -1);

    // Walk alpha^0 .. alpha^(q-2). The polynomial is primitive iff the walk
    // returns to 1 only after exactly q-1 steps.
    std::uint32_t v = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        if (v == 1 && i != 0)
            throw ConfigError("GF(2^m): polynomial is not primitive (multiplicative order too small)");
        exp_[i] = static_cast<FieldElement>(v);
        exp_[i + q_ - 1] = static_cast<FieldElement>(v);
        log_[v] = static_cast<std::int32_t>(i);
        v <<= 1;
        if (v & q_) v ^= poly_;
    }
    if (v != 1)
        throw ConfigError("GF(2^m): polynomial is not primitive");
}

FieldElement Field::inv(FieldElement a) const {
    if (a == 0) throw ArgumentError("GF(2^m): 0 has no inverse");
    return exp_[q_ - 1 - static_cast<std::uint32_t>(log_[a])];
}

FieldElement Field::pow_alpha(long long e) const {
    long long r = e % static_cast<long long>(q_ - 1);
    if (r < 0) r += q_ - 1;
    return exp_[static_cast<std::size_t>(r)];
}

int Field::log_alpha(FieldElement a) const {
    if (a == 0) throw ArgumentError("GF(2^m): log of 0 is undefined");
    return static_cast<int>(log_[a]);
}

FieldElement elem_from_bits(const BitString& block, const Field& f) {
    if (block.size() != static_cast<std::size_t>(f.m()))
        throw ArgumentError("elem_from_bits: block length must equal m");
    FieldElement v = 0;
    for (std::size_t i = 0; i < block.size(); ++i)
        v = static_cast<FieldElement>((v << 1) | block[i]);
    return v;
}

BitString elem_to_bits(FieldElement e, const Field& f) {
    BitString out;
    for (int i = f.m() - 1; i >= 0; --i)
        out.push_back(static_cast<std::uint8_t>((e >> i) & 1));
    return out;
}

} // namespace gcdel
