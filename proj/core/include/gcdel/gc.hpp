#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "gcdel/bitstring.hpp"
#include "gcdel/gf2m.hpp"
#include "gcdel/mds.hpp"

namespace gcdel {

/// Configuration of a Guess & Check code.
struct GcParams {
    int k = 0;       ///< message bits
    int delta = 0;   ///< deletion budget
    int c = 0;       ///< MDS parity symbols, must exceed delta
    int ell = 0;     ///< block length in bits; 0 selects ceil(log2 k)
    MdsMode mds_mode = MdsMode::Auto;
    std::uint32_t prim_poly = 0; ///< 0 selects the default for m = ell
};

struct DecodeOutcome {
    enum class Verdict { Success, Ambiguous, NoValidCase };
    Verdict verdict = Verdict::NoValidCase;
    BitString message;           ///< set on Success only
    int distinct_candidates = 0; ///< distinct decoded messages over possible cases
    bool success() const { return verdict == Verdict::Success; }
};

/// Full record of one evaluated case (deletion-distribution hypothesis),
/// for inspection and tests.
struct CaseResult {
    std::vector<int> per_block; ///< assumed deletions per block; the hypothesis
    bool solvable = false; ///< hypothesis fits block widths and parity supply
    bool crit1_ok = false; ///< candidate satisfies every unused parity
    bool crit2_ok = false; ///< every erasure fill is a supersequence of its sub-block
    bool possible = false;
    SymbolString symbols;  ///< decoded q-ary string (when solvable)
    BitString message;     ///< its binary image (when solvable)
};

/// Number of weak compositions of d_sys into K parts: C(K + d_sys - 1, d_sys).
std::uint64_t composition_count(int K, int d_sys);

/// All weak compositions of d_sys into K parts in lexicographic order.
/// Intended for small instances; the decoder itself does not materialize this.
std::vector<std::vector<int>> enumerate_cases(int K, int d_sys);

/// Erasure decoder over a fixed block layout with parities supplied
/// out of band. Blocks may have different widths (the last block of a
/// segment may be shorter than ell); width w blocks hold elements < 2^w.
/// This is the decoding engine behind GcCode and the sync protocol.
class SegmentCodec {
public:
    SegmentCodec(std::shared_ptr<const Field> field, MdsCode mds, std::vector<int> widths);

    int message_bits() const { return total_bits_; }
    int block_count() const { return static_cast<int>(widths_.size()); }
    const std::vector<int>& widths() const { return widths_; }
    const MdsCode& mds() const { return mds_; }
    const Field& field() const { return *field_; }

    SymbolString map_message(const BitString& x) const;

    /// All mds().c() parity symbols of a full message.
    SymbolString parities_of(const BitString& x) const;

    /// Decode y_sys (message with d = message_bits - |y_sys| deletions)
    /// given the first |parities| parity symbols. Hypotheses whose erasure
    /// count exceeds the parity supply are skipped.
    DecodeOutcome decode(const BitString& y_sys, std::span<const FieldElement> parities) const;

    /// Per-case trace of the same decode, in enumerate_cases order.
    std::vector<CaseResult> decode_cases(const BitString& y_sys,
                                         std::span<const FieldElement> parities) const;

private:
    std::shared_ptr<const Field> field_;
    MdsCode mds_;
    std::vector<int> widths_;
    std::vector<int> width_prefix_; // size K+1
    int total_bits_ = 0;

    friend class GcCode;
    void collect_candidates(const std::uint8_t* y, int len, int cp,
                            const FieldElement* parities,
                            std::vector<BitString>& candidates) const;
};

/// The Guess & Check codec: systematic MDS protection of log-sized blocks
/// with repetition-coded parity bits, decoded by enumerating deletion
/// distributions and keeping the hypotheses consistent with the parities.
class GcCode {
public:
    explicit GcCode(const GcParams& params);

    const GcParams& params() const { return params_; }
    int k() const { return params_.k; }
    int delta() const { return params_.delta; }
    int c() const { return params_.c; }
    int ell() const { return ell_; }
    int block_count() const { return K_; }
    int codeword_bits() const { return n_; }
    int redundancy_bits() const { return n_ - params_.k; }
    const Field& field() const { return *field_; }
    const MdsCode& mds() const { return codec_.mds(); }

    /// Full encode: systematic bits, then each parity bit repeated
    /// (delta+1) times consecutively.
    BitString encode(const BitString& u) const;

    /// Blocks I-III only: systematic bits followed by the raw parity bits.
    BitString pre_repetition_codeword(const BitString& u) const;

    /// Block I: chunk and map to K field symbols.
    SymbolString map_message(const BitString& u) const;

    /// Block II output: the c parity symbols of u.
    SymbolString parities(const BitString& u) const;

    /// Read the parity symbols back from a received string of length
    /// n - d' with 0 <= d' <= delta. Exact for every placement of the
    /// deletions: the bit at received offset (i-1)(delta+1) from the end
    /// is always a copy of the i-th parity bit from the codeword end.
    SymbolString recover_parities(const BitString& y) const;

    /// Decode a received codeword; d' is inferred from the length.
    /// Enumerates every systematic/parity split of the deletions and every
    /// per-block distribution, and succeeds iff all possible cases agree.
    DecodeOutcome decode(const BitString& y) const;

    /// Decode when the parities arrived intact out of band (all deletions
    /// are in y_sys). Erasures are solved with the first e supplied
    /// parities and checked against the rest.
    DecodeOutcome decode_with_parities(const BitString& y_sys,
                                       std::span<const FieldElement> parities) const;

    /// Per-case trace for decode_with_parities.
    std::vector<CaseResult> decode_cases(const BitString& y_sys,
                                         std::span<const FieldElement> parities) const;

private:
    static int checked_ell(const GcParams& p);

    GcParams params_;
    int ell_;
    int K_;
    int n_;
    std::shared_ptr<const Field> field_;
    SegmentCodec codec_;
};

} // namespace gcdel
