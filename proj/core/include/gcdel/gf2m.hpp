#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "gcdel/bitstring.hpp"

namespace gcdel {

/// Element of GF(2^m), stored as the m-bit coefficient vector of its
/// polynomial representation. Plain integer; the Field supplies arithmetic.
using FieldElement = std::uint16_t;

using SymbolString = std::vector<FieldElement>;

/// GF(2^m) with table-backed arithmetic, 2 <= m <= 16. The generator used
/// for exp/log is x itself, so the polynomial must be primitive; this is
/// validated at construction by walking the full multiplicative cycle.
class Field {
public:
    /// prim_poly is the (m+1)-bit mask of a degree-m primitive polynomial,
    /// e.g. 0x13 for x^4+x+1. Pass 0 to use the default for this m.
    explicit Field(int m, std::uint32_t prim_poly = 0);

    int m() const { return m_; }
    std::uint32_t order() const { return q_; }            // q = 2^m
    std::uint32_t poly() const { return poly_; }

    FieldElement add(FieldElement a, FieldElement b) const { return a ^ b; }

    FieldElement mul(FieldElement a, FieldElement b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[static_cast<std::size_t>(log_[a]) + static_cast<std::size_t>(log_[b])];
    }

    /// Multiplicative inverse; throws ArgumentError on 0.
    FieldElement inv(FieldElement a) const;

    /// alpha^e for any integer exponent (reduced mod q-1).
    FieldElement pow_alpha(long long e) const;

    /// Discrete log base alpha; throws ArgumentError on 0.
    int log_alpha(FieldElement a) const;

    /// Table of primitive polynomials used when prim_poly = 0.
    static std::uint32_t default_poly(int m);

private:
    int m_ = 0;
    std::uint32_t q_ = 0;
    std::uint32_t poly_ = 0;
    std::vector<FieldElement> exp_; // 2*(q-1) entries, doubled to skip a mod
    std::vector<std::int32_t> log_; // q entries, log_[0] = -1
};

/// Map an m-bit block to its field element, MSB first: bits b1..bm become
/// the polynomial b1*x^(m-1) + ... + bm. Throws ArgumentError on length.
FieldElement elem_from_bits(const BitString& block, const Field& f);

/// Inverse of elem_from_bits; always returns exactly m bits.
BitString elem_to_bits(FieldElement e, const Field& f);

} // namespace gcdel
