#include <doctest.h>

#include "gcdel/bitstring.hpp"
#include "gcdel/errors.hpp"
#include "gcdel/rng.hpp"

using namespace gcdel;

namespace {

// brute-force oracle: s is a subsequence of t iff some deletion subset of t
// yields s
bool subsequence_oracle(const BitString& s, const BitString& t) {
    if (s.size() > t.size()) return false;
    const std::size_t n = t.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        BitString kept;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) kept.push_back(t[i]);
        if (kept == s) return true;
    }
    return false;
}

} // namespace

TEST_CASE("is_subsequence: paper and boundary cases") {
    CHECK_FALSE(is_subsequence(BitString::from_string("000"), BitString::from_string("0011")));
    CHECK(is_subsequence(BitString(), BitString::from_string("1011")));
    // frozen from the brute-force oracle
    CHECK(subsequence_oracle(BitString::from_string("111"), BitString::from_string("1101")));
    CHECK(is_subsequence(BitString::from_string("111"), BitString::from_string("1101")));
}

TEST_CASE("is_subsequence agrees with the brute-force oracle") {
    Rng rng(42);
    for (int iter = 0; iter < 2000; ++iter) {
        const std::size_t tlen = 1 + rng.below(10);
        const std::size_t slen = rng.below(tlen + 2); // sometimes longer than t
        const BitString t = rng.random_bits(tlen);
        const BitString s = rng.random_bits(slen);
        CHECK(is_subsequence(s, t) == subsequence_oracle(s, t));
    }
}

TEST_CASE("chunk: block splits") {
    const auto blocks = chunk(BitString::from_string("1110000011010001"), 4);
    REQUIRE(blocks.size() == 4);
    CHECK(blocks[0].to_string() == "1110");
    CHECK(blocks[1].to_string() == "0000");
    CHECK(blocks[2].to_string() == "1101");
    CHECK(blocks[3].to_string() == "0001");

    CHECK(chunk(BitString(), 4).empty());

    const auto two = chunk(BitString::from_string("10100101"), 4);
    REQUIRE(two.size() == 2);
    CHECK(two[0].to_string() == "1010");
    CHECK(two[1].to_string() == "0101");

    CHECK_THROWS_AS(chunk(BitString::from_string("101"), 2), ConfigError);
}

TEST_CASE("delete_at: positions are 1-based") {
    const BitString x = BitString::from_string("111000001101000100100111");
    CHECK(delete_at(x, {14}).to_string() == "11100000110100100100111");
    CHECK(delete_at(x, {}) == x);
    CHECK(delete_at(BitString::from_string("1010"), {1, 2, 3, 4}).empty());

    CHECK_THROWS_AS(delete_at(x, {0}), ArgumentError);
    CHECK_THROWS_AS(delete_at(x, {25}), ArgumentError);
    CHECK_THROWS_AS(delete_at(x, {3, 3}), ArgumentError);
}

TEST_CASE("delete_at output is always a subsequence; chunk/concat round-trips") {
    Rng rng(7);
    for (int iter = 0; iter < 500; ++iter) {
        const std::size_t n = 1 + rng.below(40);
        const BitString s = rng.random_bits(n);
        const std::size_t del = rng.below(n + 1);
        const auto positions = rng.sample_deletion_positions(n, del);
        CHECK(is_subsequence(delete_at(s, positions), s));
    }
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t blocks = 1 + rng.below(8);
        const std::size_t ell = 1 + rng.below(8);
        const BitString s = rng.random_bits(blocks * ell);
        CHECK(concat(chunk(s, ell)) == s);
    }
}
