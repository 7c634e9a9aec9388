#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "gcdel/gf2m.hpp"

namespace gcdel {

enum class MdsMode {
    Auto,             ///< PaperCompatible when c == 2, Cauchy otherwise
    PaperCompatible,  ///< c = 2: rows (1,...,1) and (1, a, a^2, ..., a^(K-1))
    Cauchy,           ///< rows 1/(x_r + y_j); any square submatrix nonsingular
};

/// Systematic (K+c, K) erasure code over GF(2^m). Row r of the c x K
/// coefficient matrix generates parity p_r = sum_j G[r][j] * U[j].
class MdsCode {
public:
    MdsCode(std::shared_ptr<const Field> field, int K, int c, MdsMode mode = MdsMode::Auto);

    int K() const { return K_; }
    int c() const { return c_; }
    MdsMode mode() const { return mode_; }
    const Field& field() const { return *field_; }
    std::shared_ptr<const Field> field_ptr() const { return field_; }

    /// Coefficient G[r][j], 0-based.
    FieldElement coeff(int r, int j) const { return G_[static_cast<std::size_t>(r) * K_ + j]; }

    /// The c parity symbols for a K-symbol message.
    SymbolString encode_parities(const SymbolString& U) const;

    /// Solve for erased symbols. `known` holds (1-based position, value)
    /// pairs, `erased` the remaining 1-based positions, `parities` the
    /// supplied (1-based parity index, value) pairs; |erased| == |parities|.
    /// Returns the full K-symbol string.
    SymbolString erasure_decode(const std::vector<std::pair<int, FieldElement>>& known,
                                const std::vector<int>& erased,
                                const std::vector<std::pair<int, FieldElement>>& parities) const;

    /// True iff candidate reproduces expected[r] for every 1-based parity
    /// index r in parity_indices.
    bool check_parities(const SymbolString& candidate,
                        const std::vector<int>& parity_indices,
                        const SymbolString& expected) const;

private:
    std::shared_ptr<const Field> field_;
    int K_;
    int c_;
    MdsMode mode_;
    std::vector<FieldElement> G_; // row-major c x K
};

} // namespace gcdel
