#include "gcdel/sync.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <memory>

#include "gcdel/errors.hpp"
#include "gcdel/gc.hpp"
#include "gcdel/mds.hpp"
#include "gcdel/vt.hpp"

namespace gcdel {

const char* to_string(SyncResult::Reason r) {
    switch (r) {
    case SyncResult::Reason::None: return "none";
    case SyncResult::Reason::RoundLimit: return "round_limit";
    case SyncResult::Reason::VerificationFailed: return "verification_failed";
    }
    return "?";
}

const char* to_string(MsgKind k) {
    switch (k) {
    case MsgKind::Anchor: return "anchor";
    case MsgKind::AnchorReply: return "anchor_reply";
    case MsgKind::VtSyndrome: return "vt_syndrome";
    case MsgKind::GcParities: return "gc_parities";
    case MsgKind::ExtraParity: return "extra_parity";
    case MsgKind::Verbatim: return "verbatim";
    case MsgKind::Checksum: return "checksum";
    case MsgKind::Ack: return "ack";
    }
    return "?";
}

std::optional<std::size_t> find_anchor(const BitString& pattern, const BitString& segment,
                                       std::size_t lo, std::size_t hi,
                                       std::size_t expected_start, std::size_t d) {
    const std::size_t m = pattern.size();
    if (m == 0 || segment.size() < m) return std::nullopt;
    hi = std::min(hi, segment.size() - m);
    for (std::size_t s = lo; s <= hi; ++s) {
        // a match left of expected_start - d or right of expected_start would
        // imply a negative deletion count in one child
        if (s + d < expected_start || s > expected_start) continue;
        bool match = true;
        for (std::size_t t = 0; t < m; ++t)
            if (segment[s + t] != pattern[t]) { match = false; break; }
        if (match) return s;
        if (s == hi) break; // avoid wrap when hi == SIZE_MAX
    }
    return std::nullopt;
}

std::uint64_t fingerprint64(const BitString& s) {
    constexpr std::uint64_t kPoly = 0x42F0E1EBA9EA3693ULL; // CRC-64/ECMA-182
    std::uint64_t crc = 0;
    auto feed = [&](std::uint64_t bit) {
        const std::uint64_t top = crc >> 63;
        crc <<= 1;
        if (top ^ bit) crc ^= kPoly;
    };
    for (auto b : s) feed(b);
    const std::uint64_t len = s.size();
    for (int i = 63; i >= 0; --i) feed((len >> i) & 1);
    return crc;
}

namespace {

int ceil_log2(std::size_t v) {
    return v <= 1 ? 0 : std::bit_width(v - 1);
}

struct SegShape {
    int ell = 0;
    int K = 0;
    int cMax = 0;
    bool ok = false;
};

// Block length for a segment of lenA bits: ceil(log2 lenA), raised until the
// field can hold the Cauchy point sets (K + 2c elements), capped at m = 16.
// At the cap, segments up to 16*(2^16 - 2c) bits still fit as more blocks.
SegShape segment_code_shape(std::size_t lenA, int cInit, int extraLimit) {
    SegShape sh;
    for (int ell = std::min(16, std::max(2, ceil_log2(lenA))); ell <= 16; ++ell) {
        const int K = static_cast<int>((lenA + static_cast<std::size_t>(ell) - 1) / ell);
        const long q = 1L << ell;
        if (K + 2L * cInit <= q) {
            sh.ell = ell;
            sh.K = K;
            sh.cMax = static_cast<int>(std::min<long>(cInit + extraLimit, (q - K) / 2));
            sh.ok = true;
            return sh;
        }
    }
    return sh;
}

std::vector<int> segment_widths(std::size_t lenA, const SegShape& sh) {
    std::vector<int> widths(static_cast<std::size_t>(sh.K), sh.ell);
    const int last = static_cast<int>(lenA) - (sh.K - 1) * sh.ell;
    widths.back() = last;
    return widths;
}

struct Seg {
    std::size_t a0 = 0, a1 = 0; // node A's range in x
    BitString bBits;            // node B's current bits for the range
    std::size_t d = 0;          // lenA - lenB
    enum class State { Active, Repairing, Synced } state = State::Active;
    bool forceVerbatim = false;
    bool gcFailPending = false; // B asked for one more parity
    int anchorAttempts = 0;     // missed anchors so far; selects the pattern offset
    int paritiesSent = 0;
    SegShape shape;
    SymbolString paritiesA;   // A side, all cMax parities
    SymbolString paritiesB;   // B side, received so far
    std::shared_ptr<SegmentCodec> codecB;
    std::size_t lenA() const { return a1 - a0; }
};

// Pattern start for the given attempt: the midpoint first, then shifts of
// +-m, +-2m, ... that still fit. Both nodes derive the same offset from the
// shared attempt counter.
std::optional<std::size_t> anchor_offset(std::size_t lenA, std::size_t m, int attempt) {
    const long long base = static_cast<long long>((lenA - m) / 2);
    const long long maxStart = static_cast<long long>(lenA - m);
    int found = 0;
    for (int step = 0; step <= 64; ++step) {
        long long cand = base;
        if (step > 0) {
            const long long shift = ((step + 1) / 2) * static_cast<long long>(m);
            cand += (step % 2 ? -shift : shift);
        }
        if (cand < 0 || cand > maxStart) continue;
        if (found == attempt) return static_cast<std::size_t>(cand);
        ++found;
    }
    return std::nullopt;
}

struct Session {
    const BitString& x;
    SyncStrategy strategy;
    const SyncConfig& cfg;
    std::vector<Seg> segs;
    SyncResult result;
    Transcript* transcript;
    std::vector<SyncMessage> roundMsgs;
    std::map<int, std::shared_ptr<const Field>> fields;

    std::shared_ptr<const Field> field_for(int m) {
        auto it = fields.find(m);
        if (it != fields.end()) return it->second;
        auto f = std::make_shared<const Field>(m);
        fields.emplace(m, f);
        return f;
    }

    void log(MsgDir dir, MsgKind kind, int seg, long header, long payload) {
        result.total_bits += header + payload;
        if (transcript) roundMsgs.push_back(SyncMessage{dir, kind, seg, header, payload});
    }
};

} // namespace

std::pair<SyncResult, BitString> sync_run(const BitString& x, const BitString& y,
                                          SyncStrategy strategy, const SyncConfig& cfg,
                                          Transcript* transcript) {
    if (y.size() > x.size())
        throw ArgumentError("sync_run: node B's copy cannot be longer than node A's");
    if (cfg.delta < 1) throw ConfigError("sync_run: delta must be at least 1");
    if (cfg.center_m < 1) throw ConfigError("sync_run: center_m must be at least 1");
    if (cfg.window_slack < 0) throw ConfigError("sync_run: window_slack must be nonnegative");
    if (cfg.checksum_bits < 1 || cfg.checksum_bits > 64)
        throw ConfigError("sync_run: checksum_bits must be in [1, 64]");
    if (cfg.max_rounds < 1) throw ConfigError("sync_run: max_rounds must be at least 1");
    if (cfg.extra_parity_limit < 0) throw ConfigError("sync_run: extra_parity_limit must be nonnegative");

    const std::size_t threshold = strategy == SyncStrategy::Vt ? 1 : static_cast<std::size_t>(cfg.delta);
    const int cInit = cfg.delta + 1; // parity symbols per first GC batch
    const std::uint64_t checksumMask =
        cfg.checksum_bits == 64 ? ~0ULL : ((1ULL << cfg.checksum_bits) - 1);

    Session ss{x, strategy, cfg, {}, {}, transcript, {}, {}};
    {
        Seg root;
        root.a0 = 0;
        root.a1 = x.size();
        root.bBits = y;
        root.d = x.size() - y.size();
        root.state = root.d == 0 ? Seg::State::Synced : Seg::State::Active;
        ss.segs.push_back(std::move(root));
    }

    bool done = false;
    int rounds = 0;
    while (rounds < cfg.max_rounds && !done) {
        ++rounds;
        ss.roundMsgs.clear();

        std::vector<std::size_t> active;
        for (std::size_t i = 0; i < ss.segs.size(); ++i)
            if (ss.segs[i].state != Seg::State::Synced) active.push_back(i);

        if (active.empty()) {
            // terminal exchange: fingerprint of x against B's reconstruction
            ss.log(MsgDir::AToB, MsgKind::Checksum, -1, 0, cfg.checksum_bits);
            BitString rec;
            for (const auto& s : ss.segs) rec.append(s.bBits);
            const bool match =
                (fingerprint64(x) & checksumMask) == (fingerprint64(rec) & checksumMask);
            ss.log(MsgDir::BToA, MsgKind::Ack, -1, 0, 1);
            ss.result.success = match;
            ss.result.reason =
                match ? SyncResult::Reason::None : SyncResult::Reason::VerificationFailed;
            done = true;
            if (transcript) transcript->rounds.push_back(ss.roundMsgs);
            continue;
        }

        const long idW = std::max(1, ceil_log2(active.size()));
        const long header = 3 + idW; // kind tag + segment index

        // one A->B batch followed by one B->A batch; splits and repair
        // outcomes take effect at the end of the round
        struct SplitPlan {
            std::size_t segIdx;
            std::size_t sA; // pattern start, relative to the segment
            std::size_t qB; // match start in B's bits
        };
        std::vector<SplitPlan> splits;

        for (std::size_t ai = 0; ai < active.size(); ++ai) {
            Seg& s = ss.segs[active[ai]];
            const int segId = static_cast<int>(ai);
            const std::size_t lenA = s.lenA();
            const std::size_t lenB = s.bBits.size();

            if (s.state == Seg::State::Repairing) {
                if (!s.gcFailPending) continue; // settled at end of previous round
                s.gcFailPending = false;
                if (s.paritiesSent < s.shape.cMax) {
                    // one more MDS parity
                    ss.log(MsgDir::AToB, MsgKind::ExtraParity, segId, header, s.shape.ell);
                    ++ss.result.gc_extra_parities;
                    s.paritiesB.push_back(s.paritiesA[static_cast<std::size_t>(s.paritiesSent)]);
                    ++s.paritiesSent;
                    const DecodeOutcome out =
                        s.codecB->decode(s.bBits, std::span<const FieldElement>(s.paritiesB));
                    if (out.success()) {
                        s.bBits = out.message;
                        s.state = Seg::State::Synced;
                        ++ss.result.gc_repairs;
                    } else {
                        ss.log(MsgDir::BToA, MsgKind::Ack, segId, header, 1);
                        s.gcFailPending = true;
                    }
                } else {
                    // parity budget exhausted
                    ss.log(MsgDir::AToB, MsgKind::Verbatim, segId, header,
                           static_cast<long>(lenA));
                    ++ss.result.verbatim_fallbacks;
                    s.bBits = x.slice(s.a0, lenA);
                    s.state = Seg::State::Synced;
                }
                continue;
            }

            if (s.forceVerbatim || s.d > threshold) {
                bool sentAnchor = false;
                const std::size_t m = static_cast<std::size_t>(cfg.center_m);
                if (!s.forceVerbatim && lenA >= m + 2 && lenB >= m) {
                    const auto offset = anchor_offset(lenA, m, s.anchorAttempts);
                    const std::size_t slack = static_cast<std::size_t>(cfg.window_slack);
                    if (offset) {
                        const std::size_t sA = *offset;
                        const std::size_t lo = sA > s.d + slack ? sA - s.d - slack : 0;
                        const std::size_t hi = std::min(sA + slack, lenB - m);
                        if (lo <= hi) {
                            const BitString pattern = x.slice(s.a0 + sA, m);
                            ss.log(MsgDir::AToB, MsgKind::Anchor, segId, header,
                                   static_cast<long>(m));
                            const auto match = find_anchor(pattern, s.bBits, lo, hi, sA, s.d);
                            const std::size_t W = hi - lo + 1; // window positions; +1 code for "none"
                            ss.log(MsgDir::BToA, MsgKind::AnchorReply, segId, header,
                                   std::max(1, static_cast<int>(std::bit_width(W))));
                            sentAnchor = true;
                            if (match) {
                                splits.push_back(SplitPlan{active[ai], sA, *match});
                            } else {
                                // a deletion probably hit this pattern; retry at a
                                // shifted offset before giving up on anchoring
                                ++s.anchorAttempts;
                                if (s.anchorAttempts > cfg.anchor_retries ||
                                    !anchor_offset(lenA, m, s.anchorAttempts)) {
                                    s.forceVerbatim = true; // ship it next round
                                    ++ss.result.anchor_fallbacks;
                                }
                            }
                        }
                    }
                }
                if (!sentAnchor) {
                    ss.log(MsgDir::AToB, MsgKind::Verbatim, segId, header, static_cast<long>(lenA));
                    ++ss.result.verbatim_fallbacks;
                    s.bBits = x.slice(s.a0, lenA);
                    s.state = Seg::State::Synced;
                }
                continue;
            }

            if (s.d == 1) {
                // repetition-free single deletion: VT syndrome of A's segment
                const VtSyndrome syn = vt_syndrome(x.slice(s.a0, lenA));
                const long bits = std::max(1, static_cast<int>(std::bit_width(
                                                   static_cast<std::uint64_t>(lenA))));
                ss.log(MsgDir::AToB, MsgKind::VtSyndrome, segId, header, bits);
                s.bBits = vt_repair(s.bBits, syn);
                s.state = Seg::State::Synced;
                ++ss.result.vt_repairs;
                continue;
            }

            // 2 <= d <= delta: GC parities over the noiseless link
            {
                s.shape = segment_code_shape(lenA, cInit, cfg.extra_parity_limit);
                if (!s.shape.ok) {
                    ss.log(MsgDir::AToB, MsgKind::Verbatim, segId, header, static_cast<long>(lenA));
                    ++ss.result.verbatim_fallbacks;
                    s.bBits = x.slice(s.a0, lenA);
                    s.state = Seg::State::Synced;
                    continue;
                }
                auto field = ss.field_for(s.shape.ell);
                const auto widths = segment_widths(lenA, s.shape);
                MdsCode mds(field, s.shape.K, s.shape.cMax, MdsMode::Cauchy);
                s.codecB = std::make_shared<SegmentCodec>(field, std::move(mds), widths);
                s.paritiesA = s.codecB->parities_of(x.slice(s.a0, lenA));
                s.paritiesB.assign(s.paritiesA.begin(), s.paritiesA.begin() + cInit);
                s.paritiesSent = cInit;
                ss.log(MsgDir::AToB, MsgKind::GcParities, segId, header,
                       static_cast<long>(cInit) * s.shape.ell);
                const DecodeOutcome out =
                    s.codecB->decode(s.bBits, std::span<const FieldElement>(s.paritiesB));
                if (out.success()) {
                    s.bBits = out.message;
                    s.state = Seg::State::Synced;
                    ++ss.result.gc_repairs;
                } else {
                    ss.log(MsgDir::BToA, MsgKind::Ack, segId, header, 1);
                    s.state = Seg::State::Repairing;
                    s.gcFailPending = true;
                }
            }
        }

        // apply splits, rightmost first so stored indices stay valid
        std::sort(splits.begin(), splits.end(),
                  [](const SplitPlan& a, const SplitPlan& b) { return a.segIdx > b.segIdx; });
        for (const auto& plan : splits) {
            Seg parent = std::move(ss.segs[plan.segIdx]);
            const std::size_t m = static_cast<std::size_t>(cfg.center_m);
            const std::size_t dLeft = plan.sA - plan.qB;
            const std::size_t dRight = parent.d - dLeft;

            Seg left;
            left.a0 = parent.a0;
            left.a1 = parent.a0 + plan.sA;
            left.bBits = parent.bBits.slice(0, plan.qB);
            left.d = dLeft;
            left.state = dLeft == 0 ? Seg::State::Synced : Seg::State::Active;

            Seg mid;
            mid.a0 = parent.a0 + plan.sA;
            mid.a1 = mid.a0 + m;
            mid.bBits = parent.bBits.slice(plan.qB, m); // equals the pattern by construction
            mid.d = 0;
            mid.state = Seg::State::Synced;

            Seg right;
            right.a0 = mid.a1;
            right.a1 = parent.a1;
            right.bBits = parent.bBits.slice(plan.qB + m, parent.bBits.size() - plan.qB - m);
            right.d = dRight;
            right.state = dRight == 0 ? Seg::State::Synced : Seg::State::Active;

            assert(left.lenA() - left.bBits.size() == dLeft);
            assert(right.lenA() - right.bBits.size() == dRight);

            ss.segs[plan.segIdx] = std::move(left);
            ss.segs.insert(ss.segs.begin() + static_cast<std::ptrdiff_t>(plan.segIdx) + 1,
                           {std::move(mid), std::move(right)});
            ++ss.result.splits;
        }

        if (transcript) transcript->rounds.push_back(ss.roundMsgs);
    }

    if (!done) {
        ss.result.success = false;
        ss.result.reason = SyncResult::Reason::RoundLimit;
    }
    ss.result.rounds = rounds;

    BitString reconstruction;
    for (const auto& s : ss.segs) reconstruction.append(s.bBits);
    return {ss.result, std::move(reconstruction)};
}

} // namespace gcdel
