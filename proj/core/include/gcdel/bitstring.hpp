#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gcdel {

/// Ordered sequence of bits. One byte per bit keeps indexing and slicing
/// cheap at the sizes this library works with (up to ~1 Mbit).
class BitString {
public:
    BitString() = default;
    explicit BitString(std::vector<std::uint8_t> bits);

    /// Parse from '0'/'1' characters. Whitespace is ignored.
    static BitString from_string(std::string_view s);
    static BitString zeros(std::size_t n);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    void set(std::size_t i, std::uint8_t bit);
    void push_back(std::uint8_t bit);
    void append(const BitString& other);

    /// Copy of [pos, pos+len). Throws ArgumentError when out of range.
    BitString slice(std::size_t pos, std::size_t len) const;

    std::size_t weight() const;
    std::string to_string() const;

    const std::vector<std::uint8_t>& data() const { return bits_; }

    bool operator==(const BitString&) const = default;

    auto begin() const { return bits_.begin(); }
    auto end() const { return bits_.end(); }

private:
    std::vector<std::uint8_t> bits_;
};

/// True iff s can be obtained from t by deleting zero or more bits
/// (t is a supersequence of s). Greedy two-pointer scan, O(|t|).
bool is_subsequence(const BitString& s, const BitString& t);

/// Split s into |s|/ell adjacent blocks of exactly ell bits.
/// Throws ConfigError unless ell > 0 and ell divides |s|.
std::vector<BitString> chunk(const BitString& s, std::size_t ell);

/// Remove the given 1-based positions from s, preserving order.
/// Positions must be sorted, distinct and inside [1, |s|].
BitString delete_at(const BitString& s, const std::vector<std::size_t>& positions);

BitString concat(const std::vector<BitString>& parts);

} // namespace gcdel
