#include "pervcoh/homology.hpp"

#include <algorithm>

#include "gb_engine.hpp"

namespace pervcoh {

PresentedModule cohomology_module(const FreeComplex& C, int k, std::string provenance) {
    const RingPtr& ring = C.ring;
    int r = C.rank_at(k);
    if (r == 0) return PresentedModule::zero(ring, std::move(provenance));

    Matrix out = C.diff_at(k);       // C^k -> C^{k+1}
    Matrix in = C.diff_at(k - 1);    // C^{k-1} -> C^k

    Submodule kernel = syzygy_module(Submodule(ring, out.rows(), out.cols_as_elements()));
    const auto& K = kernel.gens();   // kernel generators inside S^r
    int s = static_cast<int>(K.size());
    if (s == 0) return PresentedModule::zero(ring, std::move(provenance));

    // Relations among the kernel generators: syzygies of [K | image columns],
    // keeping the K-block coordinates.
    std::vector<FreeElement> mixed = K;
    for (int j = 0; j < in.cols(); ++j) mixed.push_back(in.col(j));
    Submodule relations = syzygy_module(Submodule(ring, r, std::move(mixed)));

    std::vector<FreeElement> cols;
    for (const auto& rel : relations.gens()) {
        std::vector<Polynomial> head(rel.comps().begin(), rel.comps().begin() + s);
        FreeElement c(ring, std::move(head));
        if (!c.is_zero()) cols.push_back(std::move(c));
    }
    Matrix pres = Matrix::from_cols(ring, s, cols);
    return PresentedModule(ring, std::move(pres), std::move(provenance));
}

bool is_zero_module(const PresentedModule& M) {
    if (M.rank == 0) return true;
    Submodule image(M.ring, M.rank, M.presentation.cols_as_elements());
    for (int i = 0; i < M.rank; ++i) {
        FreeElement e(M.ring, M.rank);
        e[i] = Polynomial::constant(M.ring, make_rational(1));
        if (!submodule_contains(image, e)) return false;
    }
    return true;
}

Ideal annihilator(const PresentedModule& M) {
    const RingPtr& ring = M.ring;
    int r = M.rank;
    if (r == 0)
        return Ideal(ring, {Polynomial::constant(ring, make_rational(1))});

    // f annihilates M iff f * e_i lies in the image for every i; stack all r
    // conditions into S^{r*r}: syzygies of [vec(Id) | diag(A,...,A)], first
    // coordinates.
    int c = M.presentation.cols();
    std::vector<FreeElement> gens;
    FreeElement v(ring, r * r);
    for (int i = 0; i < r; ++i) v[i * r + i] = Polynomial::constant(ring, make_rational(1));
    gens.push_back(std::move(v));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            FreeElement w(ring, r * r);
            for (int row = 0; row < r; ++row) w[i * r + row] = M.presentation.at(row, j);
            gens.push_back(std::move(w));
        }

    Submodule syz = syzygy_module(Submodule(ring, r * r, std::move(gens)));
    std::vector<Polynomial> ann;
    for (const auto& s : syz.gens())
        if (!s[0].is_zero()) ann.push_back(s[0]);
    return Ideal(ring, std::move(ann));
}

FreeComplex free_resolution(const PresentedModule& M) {
    using detail::VPoly;
    const RingPtr& ring = M.ring;
    int n = ring->nvars();

    FreeComplex res(ring);
    res.ranks[0] = M.rank;
    if (M.rank == 0) return res;

    auto pot = std::make_shared<detail::PotOrder>(MonomialOrder::grevlex(n));
    std::vector<VPoly> cols;
    for (int j = 0; j < M.presentation.cols(); ++j)
        cols.push_back(detail::vp_from_free(M.presentation.col(j), *pot));

    std::vector<VPoly> level =
        detail::interreduce(detail::buchberger(std::move(cols), *pot, M.rank == 1), *pot);
    detail::arrange_for_schreyer(level, n);

    std::shared_ptr<const detail::ModuleOrder> ord = pot;
    int parent_rank = M.rank;
    for (int depth = 1; !level.empty(); ++depth) {
        if (depth > n)
            throw std::logic_error("free_resolution exceeded the variable count");
        std::vector<FreeElement> cols_out;
        cols_out.reserve(level.size());
        for (const auto& v : level) cols_out.push_back(detail::vp_to_free(v, ring, parent_rank));
        res.ranks[-depth] = static_cast<int>(level.size());
        res.diffs[-depth] = Matrix::from_cols(ring, parent_rank, cols_out);

        detail::SchreyerLevel next = detail::schreyer_syzygies(level, ord, n);
        parent_rank = static_cast<int>(level.size());
        level = std::move(next.syzygies);
        ord = next.order;
    }
    return res;
}

std::optional<int> support_dimension(const PresentedModule& M, const Ideal& restrict_to) {
    return dimension(ideal_sum(annihilator(M), restrict_to));
}

std::optional<int> support_dimension(const PresentedModule& M) {
    return dimension(annihilator(M));
}

std::optional<int> local_cohomology_min_degree(const Ideal& Z, const FreeComplex& C,
                                               const DualizingData& D) {
    if (C.is_zero()) return std::nullopt;
    FreeComplex DC = dualize(C, D);
    std::optional<int> best;
    for (int k = DC.min_degree(); k <= DC.max_degree(); ++k) {
        auto s = support_dimension(cohomology_module(DC, k), Z);
        if (!s) continue;
        int candidate = -k - *s;
        if (!best || candidate < *best) best = candidate;
    }
    return best;
}

}  // namespace pervcoh
