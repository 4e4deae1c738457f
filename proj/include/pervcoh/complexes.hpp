#pragma once

#include <map>
#include <stdexcept>

#include "pervcoh/matrix.hpp"

namespace pervcoh {

struct ComplexShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bounded cochain complex of free modules, d^k : C^k -> C^{k+1}. Degrees not
// present in `ranks` are zero; differentials not present are zero maps.
struct FreeComplex {
    RingPtr ring;
    std::map<int, int> ranks;
    std::map<int, Matrix> diffs;

    FreeComplex() = default;
    explicit FreeComplex(RingPtr r) : ring(std::move(r)) {}

    int rank_at(int k) const {
        auto it = ranks.find(k);
        return it == ranks.end() ? 0 : it->second;
    }

    // Stored differential, or an explicit zero map of the right shape.
    Matrix diff_at(int k) const {
        auto it = diffs.find(k);
        if (it != diffs.end()) return it->second;
        return Matrix(ring, rank_at(k + 1), rank_at(k));
    }

    bool is_zero() const {
        for (const auto& [k, r] : ranks)
            if (r != 0) return false;
        return true;
    }

    // Degree bounds of the nonzero part; only valid when not is_zero().
    int min_degree() const;
    int max_degree() const;
};

// Normalization data for duality: over a ring in n variables the shift is n.
struct DualizingData {
    int shift = 0;
};

// Checks ring consistency, rank/shape agreement and d(k+1) * d(k) == 0;
// throws ComplexShapeError with the offending degree in the message.
void validate_complex(const FreeComplex& C);

// C[s]^k = C^{k+s}; differentials are carried over untwisted, which keeps
// shifting an exact involution against dualize (see dualize).
FreeComplex shift_complex(const FreeComplex& C, int s);

FreeComplex direct_sum(const FreeComplex& A, const FreeComplex& B);

// (DC)^k = (C^{-k-n})^* with differential the transpose of d^{-k-n-1}, no
// sign twist: dualize(dualize(C)) == C on the nose, and
// dualize(shift(C, s)) == shift(dualize(C), -s).
FreeComplex dualize(const FreeComplex& C, const DualizingData& D);

}  // namespace pervcoh
