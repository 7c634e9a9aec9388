#include <doctest.h>

#include <algorithm>
#include <set>

#include "gcdel/errors.hpp"
#include "gcdel/gc.hpp"
#include "gcdel/rng.hpp"

using namespace gcdel;

namespace {

GcParams example_params(int c = 2) {
    GcParams p;
    p.k = 16;
    p.delta = 1;
    p.c = c;
    p.ell = 4;
    return p;
}

const char* kMessage1 = "1110000011010001";
const char* kMessage3 = "1101000010000101";

std::set<std::string> possible_messages(const std::vector<CaseResult>& cases) {
    std::set<std::string> out;
    for (const auto& cr : cases)
        if (cr.possible) out.insert(cr.message.to_string());
    return out;
}

} // namespace

TEST_CASE("composition enumeration") {
    CHECK(enumerate_cases(4, 1).size() == 4);
    CHECK(enumerate_cases(4, 2).size() == 10);
    CHECK(composition_count(4, 2) == 10);
    const auto zero = enumerate_cases(4, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == std::vector<int>{0, 0, 0, 0});
    // lexicographic order
    const auto cases = enumerate_cases(3, 2);
    CHECK(cases.front() == std::vector<int>{0, 0, 2});
    CHECK(cases.back() == std::vector<int>{2, 0, 0});
    CHECK(std::is_sorted(cases.begin(), cases.end()));
}

TEST_CASE("parameter validation") {
    GcParams p = example_params();
    p.c = 1; // c must exceed delta
    CHECK_THROWS_AS(GcCode{p}, ConfigError);
    p = example_params();
    p.ell = 5; // must divide k
    CHECK_THROWS_AS(GcCode{p}, ConfigError);
    p = example_params();
    p.ell = 2; // 2^2 < K + c = 8 + 2
    CHECK_THROWS_AS(GcCode{p}, ConfigError);
    // default ell = ceil(log2 k) must divide k
    p = GcParams{512, 2, 3, 0, MdsMode::Auto, 0};
    CHECK_THROWS_AS(GcCode{p}, ConfigError);
}

TEST_CASE("golden encode") {
    const GcCode code(example_params());
    const Field& f = code.field();
    const BitString u = BitString::from_string(kMessage1);

    const SymbolString U = code.map_message(u);
    CHECK(U == SymbolString{f.pow_alpha(11), 0, f.pow_alpha(13), 1});
    CHECK(code.parities(u) == SymbolString{f.pow_alpha(1), f.pow_alpha(10)});

    CHECK(code.pre_repetition_codeword(u).to_string() == "111000001101000100100111");
    CHECK(code.encode(u).to_string() ==
          std::string(kMessage1) + "0000110000111111");
    CHECK(code.codeword_bits() == 32);

    CHECK(code.encode(BitString::zeros(16)) == BitString::zeros(32));
    CHECK_THROWS_AS(code.encode(BitString::from_string("101")), ArgumentError);
}

TEST_CASE("redundancy is c*(delta+1)*ell for every parameter combination") {
    for (int delta = 0; delta <= 3; ++delta)
        for (int c = delta + 1; c <= delta + 3; ++c) {
            GcParams p;
            p.k = 32;
            p.delta = delta;
            p.c = c;
            p.ell = 8;
            const GcCode code(p);
            CHECK(code.redundancy_bits() == c * (delta + 1) * 8);
        }
}

TEST_CASE("recover_parities is exact for every single-deletion position") {
    const GcCode code(example_params());
    const Field& f = code.field();
    const BitString x = code.encode(BitString::from_string(kMessage1));
    const SymbolString expected = {f.pow_alpha(1), f.pow_alpha(10)};

    CHECK(code.recover_parities(x) == expected);
    for (std::size_t p = 1; p <= x.size(); ++p)
        CHECK(code.recover_parities(delete_at(x, {p})) == expected);

    CHECK_THROWS_AS(code.recover_parities(BitString::zeros(30)), ArgumentError);
}

TEST_CASE("recover_parities is exact for every deletion pair at delta = 2") {
    GcParams p;
    p.k = 16;
    p.delta = 2;
    p.c = 3;
    p.ell = 4;
    const GcCode code(p);
    const BitString u = BitString::from_string(kMessage1);
    const BitString x = code.encode(u);
    const SymbolString expected = code.parities(u);
    for (std::size_t a = 1; a <= x.size(); ++a)
        for (std::size_t b = a + 1; b <= x.size(); ++b)
            CHECK(code.recover_parities(delete_at(x, {a, b})) == expected);
}

TEST_CASE("golden decode: the four cases of the worked example") {
    const GcCode code(example_params());
    const Field& f = code.field();

    // pre-repetition codeword of kMessage1 with its 14th bit deleted
    const BitString y = BitString::from_string("11100000110100100100111");
    const BitString ySys = y.slice(0, 15);
    const SymbolString par = {f.pow_alpha(1), f.pow_alpha(10)};

    const auto cases = code.decode_cases(ySys, par);
    REQUIRE(cases.size() == 4);

    auto find_case = [&](std::vector<int> comp) -> const CaseResult& {
        const auto it = std::find_if(cases.begin(), cases.end(), [&](const CaseResult& cr) {
            return cr.per_block == comp;
        });
        REQUIRE(it != cases.end());
        return *it;
    };

    const CaseResult& case1 = find_case({1, 0, 0, 0});
    CHECK(case1.symbols == SymbolString{f.pow_alpha(13), 0, f.pow_alpha(5), f.pow_alpha(14)});
    CHECK(case1.message.to_string() == "1101000001101001");
    CHECK_FALSE(case1.crit1_ok); // computed parity alpha, expected alpha^10
    CHECK(case1.crit2_ok);       // 111 is a subsequence of 1101
    CHECK_FALSE(case1.possible);

    const CaseResult& case2 = find_case({0, 1, 0, 0});
    CHECK(case2.symbols[1] == f.pow_alpha(4));
    CHECK(case2.crit1_ok);        // the second parity happens to hold
    CHECK_FALSE(case2.crit2_ok);  // 0011 is not a supersequence of 000
    CHECK_FALSE(case2.possible);

    const CaseResult& case3 = find_case({0, 0, 1, 0});
    CHECK_FALSE(case3.crit1_ok);
    CHECK_FALSE(case3.crit2_ok);
    CHECK_FALSE(case3.possible);

    const CaseResult& case4 = find_case({0, 0, 0, 1});
    CHECK(case4.possible);
    CHECK(case4.message.to_string() == kMessage1);

    const DecodeOutcome out = code.decode_with_parities(ySys, par);
    REQUIRE(out.success());
    CHECK(out.message.to_string() == kMessage1);
    CHECK(out.distinct_candidates == 1);
}

TEST_CASE("golden decode via the full repetition-coded codeword") {
    const GcCode code(example_params());
    const BitString u = BitString::from_string(kMessage1);
    const BitString x = code.encode(u);

    const DecodeOutcome clean = code.decode(x);
    REQUIRE(clean.success());
    CHECK(clean.message == u);

    // the deletion position of the worked example, applied to the full
    // codeword (position 14 lies in the systematic part)
    const DecodeOutcome out = code.decode(delete_at(x, {14}));
    REQUIRE(out.success());
    CHECK(out.message == u);

    CHECK_THROWS_AS(code.decode(BitString::zeros(30)), ArgumentError);
    CHECK_THROWS_AS(code.decode(BitString::zeros(33)), ArgumentError);
}

TEST_CASE("golden failure: two possible cases that disagree") {
    const GcCode code(example_params());
    const Field& f = code.field();

    const BitString ySys = BitString::from_string("110100001000001");
    const SymbolString par = {0, f.pow_alpha(8)};

    const auto cases = code.decode_cases(ySys, par);
    REQUIRE(cases.size() == 4);

    // the two distinct candidates of the worked failure example
    const SymbolString y1 = {f.pow_alpha(13), f.pow_alpha(3), f.pow_alpha(2), 1};
    const SymbolString y4 = {f.pow_alpha(13), 0, f.pow_alpha(3), f.pow_alpha(8)};

    std::set<std::string> possible = possible_messages(cases);
    REQUIRE(possible.size() == 2);

    const auto& caseA = cases[0]; // per_block (0,0,0,1): deletion in block 4
    CHECK(caseA.per_block == std::vector<int>{0, 0, 0, 1});
    CHECK(caseA.possible);
    CHECK(caseA.symbols == y4);
    CHECK(caseA.message.to_string() == kMessage3);

    const auto& caseD = cases[3]; // per_block (1,0,0,0): deletion in block 1
    CHECK(caseD.per_block == std::vector<int>{1, 0, 0, 0});
    CHECK(caseD.possible);
    CHECK(caseD.symbols == y1);

    const DecodeOutcome out = code.decode_with_parities(ySys, par);
    CHECK(out.verdict == DecodeOutcome::Verdict::Ambiguous);
    CHECK(out.distinct_candidates == 2);

    // same verdict through the full pipeline: encode, delete bit 14, decode
    const BitString x = code.encode(BitString::from_string(kMessage3));
    const DecodeOutcome full = code.decode(delete_at(x, {14}));
    CHECK(full.verdict == DecodeOutcome::Verdict::Ambiguous);
    CHECK(full.distinct_candidates == 2);
}

TEST_CASE("single parity leaves the checks vacuous") {
    const GcCode code(example_params());
    const Field& f = code.field();
    const BitString ySys = BitString::from_string("111000001101001");
    const SymbolString firstOnly = {f.pow_alpha(1)};
    const DecodeOutcome out = code.decode_with_parities(ySys, firstOnly);
    CHECK(out.verdict == DecodeOutcome::Verdict::Ambiguous);
    CHECK(out.distinct_candidates == 2); // cases 1 and 4 survive criterion 2
}

TEST_CASE("zero deletions and zero parities decode directly") {
    const GcCode code(example_params());
    const BitString u = BitString::from_string(kMessage1);
    const DecodeOutcome out = code.decode_with_parities(u, {});
    REQUIRE(out.success());
    CHECK(out.message == u);
}

TEST_CASE("no valid case on a corrupted codeword") {
    const GcCode code(example_params());
    const BitString u = BitString::from_string(kMessage1);
    BitString x = code.encode(u);
    // flip both repetition copies of the last parity bit: every hypothesis
    // now fails its parity check
    x.set(x.size() - 1, static_cast<std::uint8_t>(1 - x[x.size() - 1]));
    x.set(x.size() - 2, static_cast<std::uint8_t>(1 - x[x.size() - 2]));
    const DecodeOutcome out = code.decode(x);
    CHECK(out.verdict == DecodeOutcome::Verdict::NoValidCase);
}

TEST_CASE("parity monotonicity: more parities never widen the candidate set") {
    GcParams p = example_params(3);
    p.mds_mode = MdsMode::Cauchy;
    const GcCode code(p);
    Rng rng(2024);
    for (int iter = 0; iter < 400; ++iter) {
        const BitString u = rng.random_bits(16);
        const auto pos = rng.sample_deletion_positions(16, 1);
        const BitString ySys = delete_at(u, pos);
        const SymbolString par = code.parities(u);

        std::set<std::string> prev;
        bool first = true;
        for (int cp = 1; cp <= 3; ++cp) {
            const auto cases =
                code.decode_cases(ySys, std::span<const FieldElement>(par.data(),
                                                                      static_cast<std::size_t>(cp)));
            const auto cur = possible_messages(cases);
            CHECK(cur.count(u.to_string()) == 1); // the truth always survives
            if (!first)
                CHECK(std::includes(prev.begin(), prev.end(), cur.begin(), cur.end()));
            prev = cur;
            first = false;
        }
    }
}

TEST_CASE("fast decoder agrees with the per-case reference on random instances") {
    GcParams p;
    p.k = 24;
    p.delta = 2;
    p.c = 3;
    p.ell = 4;
    const GcCode code(p);
    Rng rng(555);
    for (int iter = 0; iter < 300; ++iter) {
        const BitString u = rng.random_bits(24);
        const std::size_t d = rng.below(3);
        const BitString ySys = delete_at(u, rng.sample_deletion_positions(24, d));
        const SymbolString par = code.parities(u);

        const auto cases = code.decode_cases(ySys, par);
        const auto reference = possible_messages(cases);
        const DecodeOutcome fast = code.decode_with_parities(ySys, par);

        CHECK(static_cast<std::size_t>(fast.distinct_candidates) == reference.size());
        if (fast.success()) {
            REQUIRE(reference.size() == 1);
            CHECK(*reference.begin() == fast.message.to_string());
        }
    }
}

TEST_CASE("never wrong on sampled two-deletion instances") {
    GcParams p;
    p.k = 16;
    p.delta = 2;
    p.c = 3;
    p.ell = 4;
    const GcCode code(p);
    Rng rng(31337);
    int successes = 0;
    for (int iter = 0; iter < 2000; ++iter) {
        const BitString u = rng.random_bits(16);
        const BitString x = code.encode(u);
        const std::size_t d = rng.below(3); // up to delta deletions
        const BitString y = delete_at(x, rng.sample_deletion_positions(x.size(), d));
        const DecodeOutcome out = code.decode(y);
        CHECK(out.verdict != DecodeOutcome::Verdict::NoValidCase);
        if (out.success()) {
            CHECK(out.message == u);
            ++successes;
        }
    }
    CHECK(successes > 1000); // failures must stay the exception
}

TEST_CASE("hypothesis count per split matches the stars-and-bars formula") {
    GcParams p;
    p.k = 32;
    p.delta = 3;
    p.c = 4;
    p.ell = 4;
    const GcCode code(p);
    for (int d = 0; d <= 3; ++d)
        CHECK(enumerate_cases(code.block_count(), d).size() == composition_count(code.block_count(), d));
    CHECK(composition_count(8, 3) == 120);
}

TEST_CASE("segment codec handles a ragged final block") {
    // 10 message bits in blocks of 4: widths 4, 4, 2
    auto field = std::make_shared<const Field>(4, 0x13);
    MdsCode mds(field, 3, 3, MdsMode::Cauchy);
    const SegmentCodec codec(field, std::move(mds), {4, 4, 2});
    CHECK(codec.message_bits() == 10);

    Rng rng(77);
    for (int iter = 0; iter < 500; ++iter) {
        const BitString u = rng.random_bits(10);
        const SymbolString par = codec.parities_of(u);
        const std::size_t d = rng.below(3);
        const BitString ySys = delete_at(u, rng.sample_deletion_positions(10, d));
        const DecodeOutcome out = codec.decode(ySys, par);
        if (out.success()) CHECK(out.message == u);
        CHECK(out.verdict != DecodeOutcome::Verdict::NoValidCase);
    }
}
