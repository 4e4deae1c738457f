#include "pervcoh/complexes.hpp"

#include <set>

namespace pervcoh {

int FreeComplex::min_degree() const {
    for (const auto& [k, r] : ranks)
        if (r != 0) return k;
    throw std::logic_error("min_degree of zero complex");
}

int FreeComplex::max_degree() const {
    for (auto it = ranks.rbegin(); it != ranks.rend(); ++it)
        if (it->second != 0) return it->first;
    throw std::logic_error("max_degree of zero complex");
}

void validate_complex(const FreeComplex& C) {
    if (!C.ring) throw ComplexShapeError("complex has no ring");
    for (const auto& [k, r] : C.ranks)
        if (r < 0) throw ComplexShapeError("negative rank in degree " + std::to_string(k));
    for (const auto& [k, d] : C.diffs) {
        if (!d.ring() || !d.ring()->same_as(*C.ring))
            throw ComplexShapeError("differential in degree " + std::to_string(k) +
                                    " is over the wrong ring");
        if (d.rows() != C.rank_at(k + 1) || d.cols() != C.rank_at(k))
            throw ComplexShapeError("differential in degree " + std::to_string(k) +
                                    " has shape " + std::to_string(d.rows()) + "x" +
                                    std::to_string(d.cols()) + ", expected " +
                                    std::to_string(C.rank_at(k + 1)) + "x" +
                                    std::to_string(C.rank_at(k)));
    }
    if (C.is_zero()) return;
    for (int k = C.min_degree(); k < C.max_degree(); ++k) {
        if (C.rank_at(k) == 0 || C.rank_at(k + 2) == 0) continue;
        if (!matrix_product(C.diff_at(k + 1), C.diff_at(k)).is_zero())
            throw ComplexShapeError("d o d != 0 between degrees " + std::to_string(k) + " and " +
                                    std::to_string(k + 2));
    }
}

FreeComplex shift_complex(const FreeComplex& C, int s) {
    FreeComplex out(C.ring);
    for (const auto& [k, r] : C.ranks) out.ranks[k - s] = r;
    for (const auto& [k, d] : C.diffs) out.diffs[k - s] = d;
    return out;
}

FreeComplex direct_sum(const FreeComplex& A, const FreeComplex& B) {
    if (!A.ring->same_as(*B.ring)) throw std::invalid_argument("direct_sum: ring mismatch");
    FreeComplex out(A.ring);
    std::set<int> degs;
    for (const auto& [k, r] : A.ranks) degs.insert(k);
    for (const auto& [k, r] : B.ranks) degs.insert(k);
    for (int k : degs) out.ranks[k] = A.rank_at(k) + B.rank_at(k);
    // Block-diagonal differentials, A block first.
    int lo = 0, hi = -1;
    if (!out.is_zero()) lo = out.min_degree(), hi = out.max_degree();
    for (int k = lo; k < hi; ++k) {
        Matrix da = A.diff_at(k), db = B.diff_at(k);
        Matrix d(out.ring, out.rank_at(k + 1), out.rank_at(k));
        for (int i = 0; i < da.rows(); ++i)
            for (int j = 0; j < da.cols(); ++j) d.at(i, j) = da.at(i, j);
        for (int i = 0; i < db.rows(); ++i)
            for (int j = 0; j < db.cols(); ++j) d.at(da.rows() + i, da.cols() + j) = db.at(i, j);
        out.diffs[k] = std::move(d);
    }
    return out;
}

FreeComplex dualize(const FreeComplex& C, const DualizingData& D) {
    int n = D.shift;
    FreeComplex out(C.ring);
    for (const auto& [k, r] : C.ranks)
        if (r != 0) out.ranks[-k - n] = r;
    for (const auto& [k, d] : C.diffs) {
        // d^k : C^k -> C^{k+1} dualizes to (DC)^{-k-1-n} -> (DC)^{-k-n}.
        if (d.rows() == 0 || d.cols() == 0) continue;
        out.diffs[-k - 1 - n] = d.transpose();
    }
    return out;
}

}  // namespace pervcoh
