#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcdel/bitstring.hpp"

namespace gcdel {

enum class SyncStrategy {
    Vt, ///< split until every segment holds at most one deletion, repair with VT syndromes
    Gc, ///< split until at most delta deletions, repair multi-deletion segments with GC parities
};

struct SyncConfig {
    int delta = 2;             ///< per-segment deletion budget for the GC strategy
    int center_m = 25;         ///< anchor pattern length
    int window_slack = 0;      ///< extra search width beyond the deletion count
    int checksum_bits = 64;    ///< terminal verification fingerprint width
    int max_rounds = 100;
    int extra_parity_limit = 5; ///< extra parities after the initial batch before falling back
    int anchor_retries = 2;    ///< shifted-pattern retries after a missed anchor before
                               ///< the segment is shipped verbatim
};

enum class MsgKind {
    Anchor,      ///< A->B: center_m bits from the segment midpoint
    AnchorReply, ///< B->A: match offset within the window, or none
    VtSyndrome,  ///< A->B: VT syndrome of the segment
    GcParities,  ///< A->B: initial c = delta+1 parity symbols
    ExtraParity, ///< A->B: one more parity symbol after a decode failure
    Verbatim,    ///< A->B: the segment bits themselves
    Checksum,    ///< A->B: fingerprint of the whole string
    Ack,         ///< B->A: 1-bit decode-failed notice, or the final verdict
};

enum class MsgDir { AToB, BToA };

struct SyncMessage {
    MsgDir dir;
    MsgKind kind;
    int segment;      ///< index in the round's active list; -1 for session-level
    long header_bits; ///< kind tag + segment index field
    long payload_bits;
};

/// Per-round message log. total bits of a run = sum over all messages of
/// header_bits + payload_bits.
struct Transcript {
    std::vector<std::vector<SyncMessage>> rounds;
};

struct SyncResult {
    int rounds = 0;
    long long total_bits = 0;
    bool success = false;
    enum class Reason { None, RoundLimit, VerificationFailed } reason = Reason::None;
    // protocol counters
    long splits = 0;
    long anchor_fallbacks = 0;   ///< anchor not found or not attemptable
    long verbatim_fallbacks = 0; ///< segments shipped verbatim
    long vt_repairs = 0;
    long gc_repairs = 0;         ///< segments repaired via GC parities
    long gc_extra_parities = 0;  ///< extra parity symbols that were needed
};

const char* to_string(SyncResult::Reason r);
const char* to_string(MsgKind k);

/// Leftmost exact match of pattern in segment[lo..hi] (start offsets,
/// inclusive) that keeps both implied child deletion counts nonnegative:
/// offsets are only accepted in [expected_start - d, expected_start].
std::optional<std::size_t> find_anchor(const BitString& pattern, const BitString& segment,
                                       std::size_t lo, std::size_t hi,
                                       std::size_t expected_start, std::size_t d);

/// CRC-64/ECMA-182 over the bits (MSB-first), then over the 64-bit length.
std::uint64_t fingerprint64(const BitString& s);

/// Run the two-node synchronization protocol: node A holds x, node B holds
/// y = x with d deletions, and they exchange batched messages over a
/// noiseless link until B's reconstruction is verified. Returns the result
/// summary and B's reconstruction. The protocol itself is deterministic.
std::pair<SyncResult, BitString> sync_run(const BitString& x, const BitString& y,
                                          SyncStrategy strategy, const SyncConfig& config,
                                          Transcript* transcript = nullptr);

} // namespace gcdel
