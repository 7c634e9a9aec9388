#include "gcdel/gc.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "gcdel/errors.hpp"

namespace gcdel {

namespace {

constexpr int kMaxDeletions = 30; // enumeration guard

// Solve the e x e system M z = rhs over the field, in place. Returns false
// when singular, which contradicts the generator's MDS certificate.
bool solve_small(const Field& F, std::vector<FieldElement>& M, std::vector<FieldElement>& rhs,
                 int e, std::vector<FieldElement>& z) {
    for (int col = 0; col < e; ++col) {
        int pivot = -1;
        for (int row = col; row < e; ++row)
            if (M[static_cast<std::size_t>(row) * e + col] != 0) { pivot = row; break; }
        if (pivot < 0) return false;
        if (pivot != col) {
            for (int j = col; j < e; ++j)
                std::swap(M[static_cast<std::size_t>(pivot) * e + j],
                          M[static_cast<std::size_t>(col) * e + j]);
            std::swap(rhs[static_cast<std::size_t>(pivot)], rhs[static_cast<std::size_t>(col)]);
        }
        const FieldElement pivInv = F.inv(M[static_cast<std::size_t>(col) * e + col]);
        for (int row = 0; row < e; ++row) {
            if (row == col) continue;
            const FieldElement f = M[static_cast<std::size_t>(row) * e + col];
            if (f == 0) continue;
            const FieldElement factor = F.mul(f, pivInv);
            for (int j = col; j < e; ++j)
                M[static_cast<std::size_t>(row) * e + j] ^=
                    F.mul(factor, M[static_cast<std::size_t>(col) * e + j]);
            rhs[static_cast<std::size_t>(row)] ^= F.mul(factor, rhs[static_cast<std::size_t>(col)]);
        }
    }
    z.resize(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i)
        z[static_cast<std::size_t>(i)] =
            F.mul(rhs[static_cast<std::size_t>(i)], F.inv(M[static_cast<std::size_t>(i) * e + i]));
    return true;
}

// Greedy scan: is `sub` (bits at y[start..start+sublen)) a subsequence of
// the w-bit image of `fill`?
bool fill_covers_subblock(FieldElement fill, int w, const std::uint8_t* sub, int sublen) {
    int i = 0;
    for (int t = 0; t < w && i < sublen; ++t) {
        const std::uint8_t bit = static_cast<std::uint8_t>((fill >> (w - 1 - t)) & 1);
        if (bit == sub[i]) ++i;
    }
    return i == sublen;
}

} // namespace

std::uint64_t composition_count(int K, int d_sys) {
    if (K < 1 || d_sys < 0) throw ArgumentError("composition_count: need K >= 1, d_sys >= 0");
    // C(K + d_sys - 1, d_sys)
    unsigned __int128 acc = 1;
    for (int i = 1; i <= d_sys; ++i) {
        acc = acc * static_cast<unsigned>(K - 1 + i) / static_cast<unsigned>(i);
        if (acc > static_cast<unsigned __int128>(UINT64_MAX))
            throw ArgumentError("composition_count: result does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

std::vector<std::vector<int>> enumerate_cases(int K, int d_sys) {
    const std::uint64_t count = composition_count(K, d_sys);
    if (count > 5'000'000ULL)
        throw ArgumentError("enumerate_cases: refusing to materialize more than 5e6 cases");
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<int> cur(static_cast<std::size_t>(K), 0);
    // lexicographic: recurse on the first coordinate
    auto rec = [&](auto&& self, int idx, int remaining) -> void {
        if (idx == K - 1) {
            cur[static_cast<std::size_t>(idx)] = remaining;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[static_cast<std::size_t>(idx)] = v;
            self(self, idx + 1, remaining - v);
        }
    };
    rec(rec, 0, d_sys);
    return out;
}

SegmentCodec::SegmentCodec(std::shared_ptr<const Field> field, MdsCode mds, std::vector<int> widths)
    : field_(std::move(field)), mds_(std::move(mds)), widths_(std::move(widths)) {
    if (!field_) throw ConfigError("SegmentCodec: field is required");
    if (widths_.empty()) throw ConfigError("SegmentCodec: need at least one block");
    if (mds_.K() != static_cast<int>(widths_.size()))
        throw ConfigError("SegmentCodec: MDS dimension must match the block count");
    width_prefix_.assign(widths_.size() + 1, 0);
    for (std::size_t j = 0; j < widths_.size(); ++j) {
        if (widths_[j] < 1 || widths_[j] > field_->m())
            throw ConfigError("SegmentCodec: block widths must be in [1, m]");
        width_prefix_[j + 1] = width_prefix_[j] + widths_[j];
    }
    total_bits_ = width_prefix_.back();
}

SymbolString SegmentCodec::map_message(const BitString& x) const {
    if (static_cast<int>(x.size()) != total_bits_)
        throw ArgumentError("SegmentCodec::map_message: wrong message length");
    SymbolString U(widths_.size(), 0);
    for (std::size_t j = 0; j < widths_.size(); ++j) {
        FieldElement v = 0;
        for (int t = 0; t < widths_[j]; ++t)
            v = static_cast<FieldElement>((v << 1) | x[static_cast<std::size_t>(width_prefix_[j] + t)]);
        U[j] = v;
    }
    return U;
}

SymbolString SegmentCodec::parities_of(const BitString& x) const {
    return mds_.encode_parities(map_message(x));
}

void SegmentCodec::collect_candidates(const std::uint8_t* y, int len, int cp,
                                      const FieldElement* parities,
                                      std::vector<BitString>& candidates) const {
    const int K = block_count();
    const int d = total_bits_ - len;
    if (d < 0)
        throw ArgumentError("SegmentCodec: received string longer than the message");
    if (d > kMaxDeletions)
        throw ArgumentError("SegmentCodec: deletion count exceeds the enumeration guard");
    const Field& F = *field_;
    const int dp1 = d + 1;

    // Block value when D deletions precede block j and j itself is intact.
    // Combos no composition can reach stay 0 and are never read.
    std::vector<FieldElement> symval(static_cast<std::size_t>(K) * dp1, 0);
    for (int j = 0; j < K; ++j) {
        const int w = widths_[static_cast<std::size_t>(j)];
        for (int D = 0; D <= d; ++D) {
            const int start = width_prefix_[static_cast<std::size_t>(j)] - D;
            if (start < 0 || start + w > len) continue;
            FieldElement v = 0;
            for (int t = 0; t < w; ++t)
                v = static_cast<FieldElement>((v << 1) | y[start + t]);
            symval[static_cast<std::size_t>(j) * dp1 + D] = v;
        }
    }

    // ps[(r, D)][j] = XOR over t < j of G[r][t] * symval[t][D]. A case's
    // unerased parity contribution is then an XOR of e+1 range differences
    // instead of a length-K dot product.
    std::vector<FieldElement> ps(static_cast<std::size_t>(cp) * dp1 * (K + 1), 0);
    for (int r = 0; r < cp; ++r) {
        for (int D = 0; D <= d; ++D) {
            FieldElement* row = &ps[(static_cast<std::size_t>(r) * dp1 + D) * (K + 1)];
            FieldElement acc = 0;
            row[0] = 0;
            for (int j = 0; j < K; ++j) {
                acc ^= F.mul(mds_.coeff(r, j), symval[static_cast<std::size_t>(j) * dp1 + D]);
                row[j + 1] = acc;
            }
        }
    }

    std::vector<int> js(static_cast<std::size_t>(std::max(d, 1)));
    std::vector<int> blocks(static_cast<std::size_t>(std::max(d, 1)));
    std::vector<int> counts(static_cast<std::size_t>(std::max(d, 1)));
    std::vector<FieldElement> dot(static_cast<std::size_t>(cp));
    std::vector<FieldElement> M, rhs, z;

    auto eval_case = [&](int units) {
        // group the sorted deletion placements into (block, count) runs
        int e = 0;
        for (int u = 0; u < units; ++u) {
            const int b = js[static_cast<std::size_t>(u)];
            if (e > 0 && blocks[static_cast<std::size_t>(e - 1)] == b) {
                ++counts[static_cast<std::size_t>(e - 1)];
            } else {
                blocks[static_cast<std::size_t>(e)] = b;
                counts[static_cast<std::size_t>(e)] = 1;
                ++e;
            }
        }
        if (e > cp) return; // not enough parities to solve this hypothesis
        for (int i = 0; i < e; ++i)
            if (counts[static_cast<std::size_t>(i)] > widths_[static_cast<std::size_t>(blocks[static_cast<std::size_t>(i)])])
                return; // a block cannot lose more bits than it has

        // unerased contribution per parity
        if (e == 0) {
            for (int r = 0; r < cp; ++r)
                dot[static_cast<std::size_t>(r)] =
                    ps[(static_cast<std::size_t>(r) * dp1 + 0) * (K + 1) + K];
        } else {
            for (int r = 0; r < cp; ++r) {
                const std::size_t base = static_cast<std::size_t>(r) * dp1;
                const FieldElement* row0 = &ps[(base + 0) * (K + 1)];
                FieldElement acc = row0[blocks[0]];
                int depth = counts[0];
                for (int i = 1; i < e; ++i) {
                    const FieldElement* row = &ps[(base + depth) * (K + 1)];
                    acc ^= static_cast<FieldElement>(row[blocks[static_cast<std::size_t>(i)]] ^
                                                     row[blocks[static_cast<std::size_t>(i - 1)] + 1]);
                    depth += counts[static_cast<std::size_t>(i)];
                }
                const FieldElement* rowl = &ps[(base + d) * (K + 1)];
                acc ^= static_cast<FieldElement>(rowl[K] ^ rowl[blocks[static_cast<std::size_t>(e - 1)] + 1]);
                dot[static_cast<std::size_t>(r)] = acc;
            }
        }

        // solve the erasures with the first e parities
        if (e > 0) {
            M.assign(static_cast<std::size_t>(e) * e, 0);
            rhs.assign(static_cast<std::size_t>(e), 0);
            for (int r = 0; r < e; ++r) {
                rhs[static_cast<std::size_t>(r)] =
                    static_cast<FieldElement>(parities[r] ^ dot[static_cast<std::size_t>(r)]);
                for (int i = 0; i < e; ++i)
                    M[static_cast<std::size_t>(r) * e + i] =
                        mds_.coeff(r, blocks[static_cast<std::size_t>(i)]);
            }
            if (!solve_small(F, M, rhs, e, z))
                throw std::logic_error("GC decode: singular erasure system (MDS certificate violated)");
        }

        // Criterion 1: every unused parity must be satisfied
        for (int r = e; r < cp; ++r) {
            FieldElement acc = dot[static_cast<std::size_t>(r)];
            for (int i = 0; i < e; ++i)
                acc ^= F.mul(mds_.coeff(r, blocks[static_cast<std::size_t>(i)]),
                             z[static_cast<std::size_t>(i)]);
            if (acc != parities[r]) return;
        }

        // fills must fit their block width, and Criterion 2: each received
        // sub-block must be a subsequence of its fill
        {
            int depth = 0;
            for (int i = 0; i < e; ++i) {
                const int b = blocks[static_cast<std::size_t>(i)];
                const int w = widths_[static_cast<std::size_t>(b)];
                const FieldElement fill = z[static_cast<std::size_t>(i)];
                if ((fill >> w) != 0) return;
                const int start = width_prefix_[static_cast<std::size_t>(b)] - depth;
                const int sublen = w - counts[static_cast<std::size_t>(i)];
                if (!fill_covers_subblock(fill, w, y + start, sublen)) return;
                depth += counts[static_cast<std::size_t>(i)];
            }
        }

        // possible: assemble the candidate message and dedup
        BitString msg;
        {
            int depth = 0, gi = 0;
            for (int j = 0; j < K; ++j) {
                const int w = widths_[static_cast<std::size_t>(j)];
                if (gi < e && blocks[static_cast<std::size_t>(gi)] == j) {
                    const FieldElement fill = z[static_cast<std::size_t>(gi)];
                    for (int t = 0; t < w; ++t)
                        msg.push_back(static_cast<std::uint8_t>((fill >> (w - 1 - t)) & 1));
                    depth += counts[static_cast<std::size_t>(gi)];
                    ++gi;
                } else {
                    const int start = width_prefix_[static_cast<std::size_t>(j)] - depth;
                    for (int t = 0; t < w; ++t)
                        msg.push_back(y[start + t]);
                }
            }
        }
        if (std::find(candidates.begin(), candidates.end(), msg) == candidates.end())
            candidates.push_back(std::move(msg));
    };

    // sorted deletion placements js[0] <= js[1] <= ... <= js[d-1]
    auto rec = [&](auto&& self, int unit, int minBlock) -> void {
        if (unit == d) {
            eval_case(d);
            return;
        }
        for (int b = minBlock; b < K; ++b) {
            js[static_cast<std::size_t>(unit)] = b;
            self(self, unit + 1, b);
        }
    };
    rec(rec, 0, 0);
}

DecodeOutcome SegmentCodec::decode(const BitString& y_sys,
                                   std::span<const FieldElement> parities) const {
    if (static_cast<int>(parities.size()) > mds_.c())
        throw ArgumentError("SegmentCodec::decode: more parities than the code defines");
    std::vector<BitString> candidates;
    collect_candidates(y_sys.data().data(), static_cast<int>(y_sys.size()),
                       static_cast<int>(parities.size()), parities.data(), candidates);
    DecodeOutcome out;
    out.distinct_candidates = static_cast<int>(candidates.size());
    if (candidates.empty()) {
        out.verdict = DecodeOutcome::Verdict::NoValidCase;
    } else if (candidates.size() == 1) {
        out.verdict = DecodeOutcome::Verdict::Success;
        out.message = std::move(candidates.front());
    } else {
        out.verdict = DecodeOutcome::Verdict::Ambiguous;
    }
    return out;
}

std::vector<CaseResult> SegmentCodec::decode_cases(const BitString& y_sys,
                                                   std::span<const FieldElement> parities) const {
    const int K = block_count();
    const int d = total_bits_ - static_cast<int>(y_sys.size());
    const int cp = static_cast<int>(parities.size());
    if (d < 0)
        throw ArgumentError("SegmentCodec::decode_cases: received string longer than the message");
    if (cp > mds_.c())
        throw ArgumentError("SegmentCodec::decode_cases: more parities than the code defines");

    // Reference path built on the mds/bits primitives; used for traces and
    // as an independent route to cross-check the fast decoder in tests.
    std::vector<CaseResult> results;
    for (auto& comp : enumerate_cases(K, d)) {
        CaseResult res;
        res.per_block = comp;

        std::vector<int> erased;
        bool fits = true;
        for (int j = 0; j < K; ++j) {
            if (comp[static_cast<std::size_t>(j)] > 0) erased.push_back(j + 1);
            if (comp[static_cast<std::size_t>(j)] > widths_[static_cast<std::size_t>(j)]) fits = false;
        }
        const int e = static_cast<int>(erased.size());
        if (!fits || e > cp) {
            results.push_back(std::move(res));
            continue;
        }
        res.solvable = true;

        // chunk y_sys: block j keeps w_j - comp_j bits
        std::vector<BitString> subBlocks;
        subBlocks.reserve(static_cast<std::size_t>(K));
        std::size_t pos = 0;
        for (int j = 0; j < K; ++j) {
            const std::size_t take = static_cast<std::size_t>(
                widths_[static_cast<std::size_t>(j)] - comp[static_cast<std::size_t>(j)]);
            subBlocks.push_back(y_sys.slice(pos, take));
            pos += take;
        }

        std::vector<std::pair<int, FieldElement>> known;
        for (int j = 0; j < K; ++j) {
            if (comp[static_cast<std::size_t>(j)] > 0) continue;
            FieldElement v = 0;
            for (auto bit : subBlocks[static_cast<std::size_t>(j)])
                v = static_cast<FieldElement>((v << 1) | bit);
            known.emplace_back(j + 1, v);
        }
        std::vector<std::pair<int, FieldElement>> usedParities;
        for (int i = 0; i < e; ++i)
            usedParities.emplace_back(i + 1, parities[static_cast<std::size_t>(i)]);

        res.symbols = mds_.erasure_decode(known, erased, usedParities);

        std::vector<int> checkIdx;
        for (int r = e + 1; r <= cp; ++r) checkIdx.push_back(r);
        SymbolString expected(parities.begin(), parities.end());
        res.crit1_ok = mds_.check_parities(res.symbols, checkIdx, expected);

        res.crit2_ok = true;
        bool fillsFit = true;
        for (int j : erased) {
            const int w = widths_[static_cast<std::size_t>(j - 1)];
            const FieldElement fill = res.symbols[static_cast<std::size_t>(j - 1)];
            if ((fill >> w) != 0) { fillsFit = false; res.crit2_ok = false; continue; }
            BitString fillBits;
            for (int t = 0; t < w; ++t)
                fillBits.push_back(static_cast<std::uint8_t>((fill >> (w - 1 - t)) & 1));
            if (!is_subsequence(subBlocks[static_cast<std::size_t>(j - 1)], fillBits))
                res.crit2_ok = false;
        }

        if (fillsFit) {
            BitString msg;
            for (int j = 0; j < K; ++j) {
                const int w = widths_[static_cast<std::size_t>(j)];
                if (comp[static_cast<std::size_t>(j)] > 0) {
                    const FieldElement fill = res.symbols[static_cast<std::size_t>(j)];
                    for (int t = 0; t < w; ++t)
                        msg.push_back(static_cast<std::uint8_t>((fill >> (w - 1 - t)) & 1));
                } else {
                    msg.append(subBlocks[static_cast<std::size_t>(j)]);
                }
            }
            res.message = std::move(msg);
        }
        res.possible = res.crit1_ok && res.crit2_ok;
        results.push_back(std::move(res));
    }
    return results;
}

int GcCode::checked_ell(const GcParams& p) {
    if (p.k < 2) throw ConfigError("GcCode: k must be at least 2");
    if (p.delta < 0) throw ConfigError("GcCode: delta must be nonnegative");
    if (p.c <= p.delta) throw ConfigError("GcCode: need c > delta");
    const int ell = p.ell > 0 ? p.ell : std::bit_width(static_cast<unsigned>(p.k - 1));
    if (ell < 2 || ell > 16) throw ConfigError("GcCode: ell must be in [2, 16]");
    if (p.k % ell != 0)
        throw ConfigError("GcCode: ell must divide k (choose ell explicitly when ceil(log2 k) does not)");
    const int K = p.k / ell;
    if ((1 << ell) < K + p.c)
        throw ConfigError("GcCode: field size 2^ell must be at least K + c");
    return ell;
}

GcCode::GcCode(const GcParams& params)
    : params_(params),
      ell_(checked_ell(params)),
      K_(params.k / ell_),
      n_(params.k + params.c * (params.delta + 1) * ell_),
      field_(std::make_shared<const Field>(ell_, params.prim_poly)),
      codec_(field_, MdsCode(field_, K_, params.c, params.mds_mode),
             std::vector<int>(static_cast<std::size_t>(K_), ell_)) {}

BitString GcCode::encode(const BitString& u) const {
    const SymbolString P = parities(u);
    BitString x = u;
    for (int r = 0; r < params_.c; ++r) {
        for (int t = 0; t < ell_; ++t) {
            const auto bit = static_cast<std::uint8_t>((P[static_cast<std::size_t>(r)] >> (ell_ - 1 - t)) & 1);
            for (int rep = 0; rep <= params_.delta; ++rep)
                x.push_back(bit);
        }
    }
    return x;
}

BitString GcCode::pre_repetition_codeword(const BitString& u) const {
    const SymbolString P = parities(u);
    BitString x = u;
    for (int r = 0; r < params_.c; ++r)
        for (int t = 0; t < ell_; ++t)
            x.push_back(static_cast<std::uint8_t>((P[static_cast<std::size_t>(r)] >> (ell_ - 1 - t)) & 1));
    return x;
}

SymbolString GcCode::map_message(const BitString& u) const {
    if (static_cast<int>(u.size()) != params_.k)
        throw ArgumentError("GcCode: message must have exactly k bits");
    return codec_.map_message(u);
}

SymbolString GcCode::parities(const BitString& u) const {
    return mds().encode_parities(map_message(u));
}

SymbolString GcCode::recover_parities(const BitString& y) const {
    const int len = static_cast<int>(y.size());
    if (len < n_ - params_.delta || len > n_)
        throw ArgumentError("GcCode::recover_parities: received length out of range");
    const int cl = params_.c * ell_;
    SymbolString out(static_cast<std::size_t>(params_.c), 0);
    for (int r = 0; r < params_.c; ++r) {
        FieldElement v = 0;
        for (int t = 0; t < ell_; ++t) {
            const int streamPos = r * ell_ + t;
            const int fromEnd = cl - streamPos;                  // 1-based parity bit index
            const int offset = (fromEnd - 1) * (params_.delta + 1); // right-offset in y
            v = static_cast<FieldElement>((v << 1) | y[static_cast<std::size_t>(len - 1 - offset)]);
        }
        out[static_cast<std::size_t>(r)] = v;
    }
    return out;
}

DecodeOutcome GcCode::decode(const BitString& y) const {
    const int len = static_cast<int>(y.size());
    if (len < n_ - params_.delta || len > n_)
        throw ArgumentError("GcCode::decode: received length out of range");
    const int dTotal = n_ - len;
    const SymbolString par = recover_parities(y);

    std::vector<BitString> candidates;
    for (int dSys = dTotal; dSys >= 0; --dSys) {
        const BitString ySys = y.slice(0, static_cast<std::size_t>(params_.k - dSys));
        codec_.collect_candidates(ySys.data().data(), params_.k - dSys, params_.c, par.data(),
                                  candidates);
    }

    DecodeOutcome out;
    out.distinct_candidates = static_cast<int>(candidates.size());
    if (candidates.empty()) {
        out.verdict = DecodeOutcome::Verdict::NoValidCase;
    } else if (candidates.size() == 1) {
        out.verdict = DecodeOutcome::Verdict::Success;
        out.message = std::move(candidates.front());
    } else {
        out.verdict = DecodeOutcome::Verdict::Ambiguous;
    }
    return out;
}

DecodeOutcome GcCode::decode_with_parities(const BitString& y_sys,
                                           std::span<const FieldElement> parities) const {
    const int d = params_.k - static_cast<int>(y_sys.size());
    if (d < 0 || d > params_.delta)
        throw ArgumentError("GcCode::decode_with_parities: systematic length out of range");
    return codec_.decode(y_sys, parities);
}

std::vector<CaseResult> GcCode::decode_cases(const BitString& y_sys,
                                             std::span<const FieldElement> parities) const {
    const int d = params_.k - static_cast<int>(y_sys.size());
    if (d < 0 || d > params_.delta)
        throw ArgumentError("GcCode::decode_cases: systematic length out of range");
    return codec_.decode_cases(y_sys, parities);
}

} // namespace gcdel
