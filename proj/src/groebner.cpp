#include "pervcoh/groebner.hpp"

#include <algorithm>
#include <stdexcept>

#include "gb_engine.hpp"

namespace pervcoh {

using detail::PotOrder;
using detail::VPoly;

namespace {

void check_order(const RingPtr& ring, const MonomialOrder& ord) {
    if (ord.nvars() != ring->nvars())
        throw std::invalid_argument("monomial order arity does not match ring");
}

std::vector<VPoly> to_engine(const std::vector<Polynomial>& gens, const detail::ModuleOrder& ord) {
    std::vector<VPoly> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(detail::vp_from_poly(g, 0, ord));
    return out;
}

std::vector<VPoly> to_engine(const std::vector<FreeElement>& gens, const detail::ModuleOrder& ord) {
    std::vector<VPoly> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(detail::vp_from_free(g, ord));
    return out;
}

}  // namespace

std::vector<Polynomial> groebner_basis(const Ideal& I, const MonomialOrder& ord) {
    check_order(I.ring(), ord);
    PotOrder pot(ord);
    auto gb = detail::interreduce(detail::buchberger(to_engine(I.gens(), pot), pot, true), pot);
    std::vector<Polynomial> out;
    out.reserve(gb.size());
    for (const auto& v : gb) out.push_back(detail::vp_to_poly(v, I.ring()));
    return out;
}

std::vector<FreeElement> groebner_basis(const Submodule& M, const MonomialOrder& ord) {
    check_order(M.ring(), ord);
    PotOrder pot(ord);
    bool rank_one = M.ambient_rank() == 1;
    auto gb = detail::interreduce(detail::buchberger(to_engine(M.gens(), pot), pot, rank_one), pot);
    std::vector<FreeElement> out;
    out.reserve(gb.size());
    for (const auto& v : gb) out.push_back(detail::vp_to_free(v, M.ring(), M.ambient_rank()));
    return out;
}

const std::vector<Polynomial>& default_groebner_basis(const Ideal& I) {
    auto& cache = I.cache();
    std::call_once(cache.once, [&] {
        cache.basis = groebner_basis(I, MonomialOrder::grevlex(I.ring()->nvars()));
    });
    return cache.basis;
}

const std::vector<FreeElement>& default_groebner_basis(const Submodule& M) {
    auto& cache = M.cache();
    std::call_once(cache.once, [&] {
        cache.basis = groebner_basis(M, MonomialOrder::grevlex(M.ring()->nvars()));
    });
    return cache.basis;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gb,
                       const MonomialOrder& ord) {
    check_order(f.ring(), ord);
    PotOrder pot(ord);
    auto rem = detail::divide(detail::vp_from_poly(f, 0, pot), to_engine(gb, pot), pot, false);
    return detail::vp_to_poly(rem.remainder, f.ring());
}

FreeElement normal_form(const FreeElement& v, const std::vector<FreeElement>& gb,
                        const MonomialOrder& ord) {
    check_order(v.ring(), ord);
    for (const auto& g : gb)
        if (g.rank() != v.rank()) throw std::invalid_argument("normal_form: rank mismatch");
    PotOrder pot(ord);
    auto rem = detail::divide(detail::vp_from_free(v, pot), to_engine(gb, pot), pot, false);
    return detail::vp_to_free(rem.remainder, v.ring(), v.rank());
}

bool ideal_contains(const Ideal& I, const Polynomial& f) {
    if (!f.ring()->same_as(*I.ring())) throw std::invalid_argument("ideal_contains: ring mismatch");
    if (f.is_zero()) return true;
    return normal_form(f, default_groebner_basis(I), MonomialOrder::grevlex(I.ring()->nvars()))
        .is_zero();
}

bool submodule_contains(const Submodule& M, const FreeElement& v) {
    if (v.rank() != M.ambient_rank())
        throw std::invalid_argument("submodule_contains: rank mismatch");
    if (v.is_zero()) return true;
    return normal_form(v, default_groebner_basis(M), MonomialOrder::grevlex(M.ring()->nvars()))
        .is_zero();
}

bool is_unit_ideal(const Ideal& I) {
    const auto& gb = default_groebner_basis(I);
    return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

bool radical_membership(const Polynomial& f, const Ideal& I) {
    if (!f.ring()->same_as(*I.ring()))
        throw std::invalid_argument("radical_membership: ring mismatch");
    // Rabinowitsch: f in rad(I) iff I + (1 - t*f) is the unit ideal in S[t].
    std::vector<std::string> vars = I.ring()->vars();
    std::string fresh = "rab_t";
    for (int k = 0; I.ring()->var_index(fresh); ++k) fresh = "rab_t" + std::to_string(k);
    vars.push_back(fresh);
    RingPtr ext = make_ring(std::move(vars));

    std::vector<Polynomial> gens;
    gens.reserve(I.gens().size() + 1);
    for (const auto& g : I.gens()) gens.push_back(g.transport(ext));
    Polynomial t = Polynomial::variable(ext, ext->nvars() - 1);
    gens.push_back(Polynomial::constant(ext, make_rational(1)) - t * f.transport(ext));
    return is_unit_ideal(Ideal(ext, std::move(gens)));
}

std::optional<int> dimension(const Ideal& I) {
    const auto& gb = default_groebner_basis(I);
    if (is_unit_ideal(I)) return std::nullopt;
    int n = I.ring()->nvars();
    std::vector<unsigned> supports;
    supports.reserve(gb.size());
    for (const auto& g : gb) {
        unsigned s = 0;
        const Monomial& m = g.lead_monomial();
        for (int v = 0; v < n; ++v)
            if (m[v] > 0) s |= 1u << v;
        supports.push_back(s);
    }
    // dim = size of the largest variable subset U with in(I) meeting QQ[U]
    // only in 0, i.e. no lead monomial supported inside U.
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (unsigned s : supports)
            if ((s & ~mask) == 0) {
                independent = false;
                break;
            }
        if (independent) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

Submodule syzygy_module(const Submodule& M) {
    int r = M.ambient_rank();
    int s = static_cast<int>(M.gens().size());
    if (s == 0) return Submodule(M.ring(), 0);

    // Embed: w_i = (g_i, e_i) in S^{r+s}; under position-over-term the GB
    // elements supported entirely in the trailing block are exactly a
    // generating set (in fact a GB) of the syzygies.
    PotOrder pot{MonomialOrder::grevlex(M.ring()->nvars())};
    std::vector<VPoly> embedded;
    embedded.reserve(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) {
        FreeElement w(M.ring(), r + s);
        for (int c = 0; c < r; ++c) w[c] = M.gens()[i][c];
        w[r + i] = Polynomial::constant(M.ring(), make_rational(1));
        embedded.push_back(detail::vp_from_free(w, pot));
    }
    auto gb = detail::interreduce(detail::buchberger(std::move(embedded), pot, false), pot);

    std::vector<FreeElement> syz;
    for (const auto& v : gb) {
        if (v.front().t.comp < r) continue;
        VPoly shifted = v;
        for (auto& t : shifted) t.t.comp -= r;
        syz.push_back(detail::vp_to_free(shifted, M.ring(), s));
    }
    return Submodule(M.ring(), s, std::move(syz));
}

Submodule syzygy_module_of_polys(const RingPtr& ring, const std::vector<Polynomial>& gens) {
    std::vector<FreeElement> lifted;
    lifted.reserve(gens.size());
    for (const auto& g : gens) lifted.emplace_back(ring, std::vector<Polynomial>{g});
    return syzygy_module(Submodule(ring, 1, std::move(lifted)));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    if (!a.ring()->same_as(*b.ring())) throw std::invalid_argument("ideal_sum: ring mismatch");
    std::vector<Polynomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    if (!a.ring()->same_as(*b.ring())) throw std::invalid_argument("ideal_product: ring mismatch");
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) {
            Polynomial p = f * g;
            if (!p.is_zero()) gens.push_back(std::move(p));
        }
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
    if (!a.ring()->same_as(*b.ring()))
        throw std::invalid_argument("ideal_intersection: ring mismatch");
    // h in I cap J iff (h, h) lies in the span of (f_i, 0), (0, g_j); read
    // that off as the first coordinates of the syzygies of the stacked system.
    const RingPtr& ring = a.ring();
    Polynomial one = Polynomial::constant(ring, make_rational(1));
    std::vector<FreeElement> gens;
    gens.emplace_back(ring, std::vector<Polynomial>{one, one});
    for (const auto& f : a.gens())
        gens.emplace_back(ring, std::vector<Polynomial>{f, Polynomial(ring)});
    for (const auto& g : b.gens())
        gens.emplace_back(ring, std::vector<Polynomial>{Polynomial(ring), g});

    Submodule syz = syzygy_module(Submodule(ring, 2, std::move(gens)));
    std::vector<Polynomial> result;
    for (const auto& s : syz.gens())
        if (!s[0].is_zero()) result.push_back(s[0]);
    return Ideal(ring, std::move(result));
}

}  // namespace pervcoh
