#include "gcdel/mds.hpp"

#include <algorithm>
#include <stdexcept>

#include "gcdel/errors.hpp"

namespace gcdel {

MdsCode::MdsCode(std::shared_ptr<const Field> field, int K, int c, MdsMode mode)
    : field_(std::move(field)), K_(K), c_(c) {
    if (!field_) throw ConfigError("MdsCode: field is required");
    if (K < 1 || c < 1)
        throw ConfigError("MdsCode: need K >= 1 and c >= 1");
    const auto q = field_->order();
    if (static_cast<std::uint32_t>(K) + static_cast<std::uint32_t>(c) > q)
        throw ConfigError("MdsCode: K + c must not exceed the field size");

    mode_ = mode == MdsMode::Auto ? (c == 2 ? MdsMode::PaperCompatible : MdsMode::Cauchy) : mode;
    G_.assign(static_cast<std::size_t>(c) * K, 0);

    if (mode_ == MdsMode::PaperCompatible) {
        if (c != 2)
            throw ConfigError("MdsCode: paper-compatible generator is defined for c = 2 only");
        // row 1: plain sum; row 2: (1, a, a^2, ..., a^(K-1))
        for (int j = 0; j < K; ++j) {
            G_[static_cast<std::size_t>(j)] = 1;
            G_[static_cast<std::size_t>(K) + j] = field_->pow_alpha(j);
        }
    } else {
        // Cauchy rows 1/(x_r + y_j) with y_j = j-1 and x_r = K+r-1 as field
        // elements; the point sets are disjoint so every entry is defined,
        // and every square submatrix of a Cauchy matrix is nonsingular.
        if (static_cast<std::uint32_t>(K) + 2u * static_cast<std::uint32_t>(c) > q)
            throw ConfigError("MdsCode: Cauchy generator needs K + 2c <= field size");
        for (int r = 0; r < c; ++r) {
            const auto x_r = static_cast<FieldElement>(K + r);
            for (int j = 0; j < K; ++j) {
                const auto y_j = static_cast<FieldElement>(j);
                G_[static_cast<std::size_t>(r) * K + j] = field_->inv(field_->add(x_r, y_j));
            }
        }
    }
}

SymbolString MdsCode::encode_parities(const SymbolString& U) const {
    if (U.size() != static_cast<std::size_t>(K_))
        throw ArgumentError("MdsCode::encode_parities: message must have K symbols");
    SymbolString p(static_cast<std::size_t>(c_), 0);
    for (int r = 0; r < c_; ++r) {
        FieldElement acc = 0;
        const FieldElement* row = &G_[static_cast<std::size_t>(r) * K_];
        for (int j = 0; j < K_; ++j)
            acc ^= field_->mul(row[j], U[static_cast<std::size_t>(j)]);
        p[static_cast<std::size_t>(r)] = acc;
    }
    return p;
}

SymbolString MdsCode::erasure_decode(const std::vector<std::pair<int, FieldElement>>& known,
                                     const std::vector<int>& erased,
                                     const std::vector<std::pair<int, FieldElement>>& parities) const {
    const int e = static_cast<int>(erased.size());
    if (parities.size() != erased.size())
        throw ArgumentError("MdsCode::erasure_decode: need as many parities as erasures");
    if (e > c_)
        throw ArgumentError("MdsCode::erasure_decode: more erasures than parity symbols");
    if (known.size() + erased.size() != static_cast<std::size_t>(K_))
        throw ArgumentError("MdsCode::erasure_decode: positions must partition 1..K");

    SymbolString out(static_cast<std::size_t>(K_), 0);
    std::vector<bool> seen(static_cast<std::size_t>(K_), false);
    for (const auto& [pos, val] : known) {
        if (pos < 1 || pos > K_ || seen[static_cast<std::size_t>(pos - 1)])
            throw ArgumentError("MdsCode::erasure_decode: bad known position");
        seen[static_cast<std::size_t>(pos - 1)] = true;
        out[static_cast<std::size_t>(pos - 1)] = val;
    }
    for (int pos : erased) {
        if (pos < 1 || pos > K_ || seen[static_cast<std::size_t>(pos - 1)])
            throw ArgumentError("MdsCode::erasure_decode: bad erased position");
        seen[static_cast<std::size_t>(pos - 1)] = true;
    }

    if (e == 0) return out;

    // e x e system: for each supplied parity r, sum over erased columns of
    // G[r][j] * z_j equals p_r minus the known-symbol contribution.
    std::vector<FieldElement> M(static_cast<std::size_t>(e) * e);
    std::vector<FieldElement> rhs(static_cast<std::size_t>(e));
    for (int row = 0; row < e; ++row) {
        const auto [pidx, pval] = parities[static_cast<std::size_t>(row)];
        if (pidx < 1 || pidx > c_)
            throw ArgumentError("MdsCode::erasure_decode: parity index out of range");
        const FieldElement* grow = &G_[static_cast<std::size_t>(pidx - 1) * K_];
        FieldElement acc = pval;
        for (const auto& [pos, val] : known)
            acc ^= field_->mul(grow[pos - 1], val);
        rhs[static_cast<std::size_t>(row)] = acc;
        for (int colIdx = 0; colIdx < e; ++colIdx)
            M[static_cast<std::size_t>(row) * e + colIdx] = grow[erased[static_cast<std::size_t>(colIdx)] - 1];
    }

    // Gaussian elimination; a singular system contradicts the generator's
    // MDS certificate.
    for (int col = 0; col < e; ++col) {
        int pivot = -1;
        for (int row = col; row < e; ++row)
            if (M[static_cast<std::size_t>(row) * e + col] != 0) { pivot = row; break; }
        if (pivot < 0)
            throw std::logic_error("MdsCode::erasure_decode: singular system (MDS certificate violated)");
        if (pivot != col) {
            for (int j = col; j < e; ++j)
                std::swap(M[static_cast<std::size_t>(pivot) * e + j], M[static_cast<std::size_t>(col) * e + j]);
            std::swap(rhs[static_cast<std::size_t>(pivot)], rhs[static_cast<std::size_t>(col)]);
        }
        const FieldElement pivInv = field_->inv(M[static_cast<std::size_t>(col) * e + col]);
        for (int row = 0; row < e; ++row) {
            if (row == col) continue;
            const FieldElement f = M[static_cast<std::size_t>(row) * e + col];
            if (f == 0) continue;
            const FieldElement factor = field_->mul(f, pivInv);
            for (int j = col; j < e; ++j)
                M[static_cast<std::size_t>(row) * e + j] ^=
                    field_->mul(factor, M[static_cast<std::size_t>(col) * e + j]);
            rhs[static_cast<std::size_t>(row)] ^= field_->mul(factor, rhs[static_cast<std::size_t>(col)]);
        }
    }
    for (int i = 0; i < e; ++i) {
        const FieldElement diag = M[static_cast<std::size_t>(i) * e + i];
        out[static_cast<std::size_t>(erased[static_cast<std::size_t>(i)] - 1)] =
            field_->mul(rhs[static_cast<std::size_t>(i)], field_->inv(diag));
    }
    return out;
}

bool MdsCode::check_parities(const SymbolString& candidate,
                             const std::vector<int>& parity_indices,
                             const SymbolString& expected) const {
    if (candidate.size() != static_cast<std::size_t>(K_))
        throw ArgumentError("MdsCode::check_parities: candidate must have K symbols");
    for (int r : parity_indices) {
        if (r < 1 || r > c_)
            throw ArgumentError("MdsCode::check_parities: parity index out of range");
        const FieldElement* row = &G_[static_cast<std::size_t>(r - 1) * K_];
        FieldElement acc = 0;
        for (int j = 0; j < K_; ++j)
            acc ^= field_->mul(row[j], candidate[static_cast<std::size_t>(j)]);
        if (acc != expected[static_cast<std::size_t>(r - 1)])
            return false;
    }
    return true;
}

} // namespace gcdel
