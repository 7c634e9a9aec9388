#include "gcdel/bitstring.hpp"

#include <algorithm>

#include "gcdel/errors.hpp"

namespace gcdel {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_)
        if (b > 1) throw ArgumentError("BitString: elements must be 0 or 1");
}

BitString BitString::from_string(std::string_view s) {
    BitString out;
    out.bits_.reserve(s.size());
    for (char ch : s) {
        if (ch == '0' || ch == '1')
            out.bits_.push_back(static_cast<std::uint8_t>(ch - '0'));
        else if (ch == ' ' || ch == '\n' || ch == '\r' || ch == '\t')
            continue;
        else
            throw ArgumentError(std::string("BitString: unexpected character '") + ch + "'");
    }
    return out;
}

BitString BitString::zeros(std::size_t n) {
    BitString out;
    out.bits_.assign(n, 0);
    return out;
}

void BitString::set(std::size_t i, std::uint8_t bit) {
    if (bit > 1) throw ArgumentError("BitString: elements must be 0 or 1");
    bits_[i] = bit;
}

void BitString::push_back(std::uint8_t bit) {
    if (bit > 1) throw ArgumentError("BitString: elements must be 0 or 1");
    bits_.push_back(bit);
}

void BitString::append(const BitString& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitString BitString::slice(std::size_t pos, std::size_t len) const {
    if (pos > bits_.size() || len > bits_.size() - pos)
        throw ArgumentError("BitString::slice: range out of bounds");
    BitString out;
    out.bits_.assign(bits_.begin() + pos, bits_.begin() + pos + len);
    return out;
}

std::size_t BitString::weight() const {
    std::size_t w = 0;
    for (auto b : bits_) w += b;
    return w;
}

std::string BitString::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
}

bool is_subsequence(const BitString& s, const BitString& t) {
    std::size_t i = 0;
    for (std::size_t j = 0; i < s.size() && j < t.size(); ++j)
        if (s[i] == t[j]) ++i;
    return i == s.size();
}

std::vector<BitString> chunk(const BitString& s, std::size_t ell) {
    if (ell == 0 || s.size() % ell != 0)
        throw ConfigError("chunk: block length must be positive and divide the string length");
    std::vector<BitString> blocks;
    blocks.reserve(s.size() / ell);
    for (std::size_t pos = 0; pos < s.size(); pos += ell)
        blocks.push_back(s.slice(pos, ell));
    return blocks;
}

BitString delete_at(const BitString& s, const std::vector<std::size_t>& positions) {
    std::size_t prev = 0;
    for (auto p : positions) {
        if (p < 1 || p > s.size())
            throw ArgumentError("delete_at: position out of range");
        if (p <= prev)
            throw ArgumentError("delete_at: positions must be sorted and distinct");
        prev = p;
    }
    BitString out;
    std::size_t next = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (next < positions.size() && positions[next] == i + 1) {
            ++next;
            continue;
        }
        out.push_back(s[i]);
    }
    return out;
}

BitString concat(const std::vector<BitString>& parts) {
    BitString out;
    for (const auto& p : parts) out.append(p);
    return out;
}

} // namespace gcdel
