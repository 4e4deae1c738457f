#include "pervcoh/ext_oracle.hpp"

#include <stdexcept>

namespace pervcoh {

namespace {

// Hom(P, C) as a complex of free modules: T^q = (+)_j Hom(P^j, C^{j+q}),
// D(phi) = d_C o phi - (-1)^q phi o d_P. Basis of Hom(P^j, C^{j+q}) is the
// elementary matrices, flattened row-major (C index major, P index minor).
FreeComplex total_hom(const FreeComplex& P, const FreeComplex& C) {
    FreeComplex T(C.ring);
    if (P.is_zero() || C.is_zero()) return T;

    int qlo = C.min_degree() - P.max_degree();
    int qhi = C.max_degree() - P.min_degree();
    for (int q = qlo; q <= qhi; ++q) {
        int total = 0;
        for (int j = P.min_degree(); j <= P.max_degree(); ++j)
            total += P.rank_at(j) * C.rank_at(j + q);
        if (total > 0) T.ranks[q] = total;
    }

    auto block_offset = [&](int q, int j) {
        int off = 0;
        for (int jj = P.min_degree(); jj < j; ++jj) off += P.rank_at(jj) * C.rank_at(jj + q);
        return off;
    };

    for (int q = qlo; q < qhi; ++q) {
        int rows = T.rank_at(q + 1), cols = T.rank_at(q);
        if (rows == 0 || cols == 0) continue;
        Matrix D(C.ring, rows, cols);
        Rational sign = make_rational(q % 2 == 0 ? -1 : 1);  // -(-1)^q
        for (int j = P.min_degree(); j <= P.max_degree(); ++j) {
            int rp = P.rank_at(j);
            int rc = C.rank_at(j + q);
            if (rp == 0 || rc == 0) continue;
            int src = block_offset(q, j);
            // d_C o phi : lands in Hom(P^j, C^{j+q+1}).
            if (C.rank_at(j + q + 1) > 0) {
                Matrix dc = C.diff_at(j + q);
                int dst = block_offset(q + 1, j);
                for (int a2 = 0; a2 < dc.rows(); ++a2)
                    for (int a = 0; a < rc; ++a)
                        for (int b = 0; b < rp; ++b)
                            D.at(dst + a2 * rp + b, src + a * rp + b) = dc.at(a2, a);
            }
            // -(-1)^q phi o d_P : phi in Hom(P^j, C^{j+q}) composes with
            // d_P^{j-1} into Hom(P^{j-1}, C^{j+q}) = block j-1 of T^{q+1}.
            if (P.rank_at(j - 1) > 0 && C.rank_at(j + q) > 0) {
                Matrix dp = P.diff_at(j - 1);
                int dst = block_offset(q + 1, j - 1);
                int rp1 = P.rank_at(j - 1);
                for (int a = 0; a < rc; ++a)
                    for (int b = 0; b < rp; ++b)
                        for (int b2 = 0; b2 < rp1; ++b2)
                            D.at(dst + a * rp1 + b2, src + a * rp + b) =
                                D.at(dst + a * rp1 + b2, src + a * rp + b) +
                                dp.at(b, b2) * sign;
            }
        }
        T.diffs[q] = std::move(D);
    }
    validate_complex(T);
    return T;
}

}  // namespace

OracleResult ext_colimit_oracle(const std::vector<Polynomial>& J, const FreeComplex& C, int i,
                                int t_max, std::optional<std::pair<int, int>> window) {
    if (t_max < 1) throw std::invalid_argument("ext_colimit_oracle: t_max must be >= 1");
    (void)window;

    OracleResult res;
    res.t_max = t_max;

    const RingPtr& ring = C.ring;
    for (int t = 1; t <= t_max; ++t) {
        Matrix pres(ring, 1, static_cast<int>(J.size()));
        for (std::size_t j = 0; j < J.size(); ++j) {
            Polynomial p = Polynomial::constant(ring, make_rational(1));
            for (int e = 0; e < t; ++e) p = p * J[j];
            pres.at(0, static_cast<int>(j)) = std::move(p);
        }
        PresentedModule quotient(ring, std::move(pres), "S/J_" + std::to_string(t));
        if (is_zero_module(quotient)) {
            // J_t is the unit ideal; Ext^*(0, C) = 0, nothing to probe here.
            continue;
        }
        FreeComplex T = total_hom(free_resolution(quotient), C);
        if (!is_zero_module(cohomology_module(T, i))) {
            res.verdict = OracleVerdict::nonvanishing_detected;
            res.witness_t = t;
            return res;
        }
    }
    res.verdict = OracleVerdict::vanishing_up_to_t_max;
    res.stabilized = t_max >= 2;
    return res;
}

}  // namespace pervcoh
