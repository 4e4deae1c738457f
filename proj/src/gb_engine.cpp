#include "gb_engine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace pervcoh::detail {

VPoly vp_from_free(const FreeElement& v, const ModuleOrder& ord) {
    VPoly out;
    for (int i = 0; i < v.rank(); ++i)
        for (const auto& [m, c] : v[i].terms()) out.push_back({ModTerm{i, m}, c});
    std::sort(out.begin(), out.end(),
              [&](const VTerm& a, const VTerm& b) { return ord.greater(a.t, b.t); });
    return out;
}

VPoly vp_from_poly(const Polynomial& p, int comp, const ModuleOrder& ord) {
    VPoly out;
    for (const auto& [m, c] : p.terms()) out.push_back({ModTerm{comp, m}, c});
    std::sort(out.begin(), out.end(),
              [&](const VTerm& a, const VTerm& b) { return ord.greater(a.t, b.t); });
    return out;
}

FreeElement vp_to_free(const VPoly& v, const RingPtr& ring, int rank) {
    std::vector<std::vector<Polynomial::Term>> buckets(static_cast<std::size_t>(rank));
    for (const auto& [t, c] : v) buckets.at(t.comp).emplace_back(t.mono, c);
    std::vector<Polynomial> comps;
    comps.reserve(buckets.size());
    for (auto& b : buckets) comps.emplace_back(ring, std::move(b));
    return FreeElement(ring, std::move(comps));
}

Polynomial vp_to_poly(const VPoly& v, const RingPtr& ring) {
    std::vector<Polynomial::Term> terms;
    terms.reserve(v.size());
    for (const auto& [t, c] : v) {
        if (t.comp != 0) throw std::logic_error("vp_to_poly on element with nonzero component");
        terms.emplace_back(t.mono, c);
    }
    return Polynomial(ring, std::move(terms));
}

VPoly vp_monic(VPoly v) {
    if (v.empty()) return v;
    Rational lc = v.front().c;
    if (lc == 1) return v;
    for (auto& t : v) t.c = Rational(t.c / lc);
    return v;
}

VPoly vp_sub_scaled(const VPoly& a, const VPoly& b, const Monomial& m, const Rational& c,
                    const ModuleOrder& ord) {
    VPoly r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            r.push_back(a[i++]);
            continue;
        }
        ModTerm bt{b[j].t.comp, mono_mul(b[j].t.mono, m)};
        if (i == a.size()) {
            r.push_back({std::move(bt), Rational(-c * b[j].c)});
            ++j;
            continue;
        }
        int cmp = ord.compare(a[i].t, bt);
        if (cmp > 0) {
            r.push_back(a[i++]);
        } else if (cmp < 0) {
            r.push_back({std::move(bt), Rational(-c * b[j].c)});
            ++j;
        } else {
            Rational nc = a[i].c - Rational(c * b[j].c);
            if (!is_zero(nc)) r.push_back({a[i].t, std::move(nc)});
            ++i, ++j;
        }
    }
    return r;
}

Reduction divide(const VPoly& v, const std::vector<VPoly>& basis, const ModuleOrder& ord,
                 bool record_cofactors, int skip) {
    Reduction res;
    if (record_cofactors) res.cofactors.resize(basis.size());
    VPoly h = v;
    std::size_t head = 0;  // terms before head are already in the remainder
    while (head < h.size()) {
        const VTerm& lt = h[head];
        int hit = -1;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (static_cast<int>(b) == skip || basis[b].empty()) continue;
            const ModTerm& bl = basis[b].front().t;
            if (bl.comp == lt.t.comp && mono_divides(bl.mono, lt.t.mono)) {
                hit = static_cast<int>(b);
                break;
            }
        }
        if (hit < 0) {
            res.remainder.push_back(lt);
            ++head;
            continue;
        }
        Monomial q = mono_quotient(lt.t.mono, basis[hit].front().t.mono);
        Rational c = lt.c / basis[hit].front().c;
        if (record_cofactors) res.cofactors[hit].emplace_back(q, c);
        VPoly tail(h.begin() + static_cast<long>(head), h.end());
        h = vp_sub_scaled(tail, basis[hit], q, c, ord);
        head = 0;
    }
    return res;
}

namespace {

// S-pair of two elements with equal lead component.
VPoly s_pair(const VPoly& a, const VPoly& b, const ModuleOrder& ord) {
    const VTerm& la = a.front();
    const VTerm& lb = b.front();
    Monomial lcm = mono_lcm(la.t.mono, lb.t.mono);
    VPoly left = vp_sub_scaled(VPoly{}, a, mono_quotient(lcm, la.t.mono),
                               Rational(make_rational(-1) / la.c), ord);
    return vp_sub_scaled(left, b, mono_quotient(lcm, lb.t.mono), Rational(make_rational(1) / lb.c),
                         ord);
}

}  // namespace

std::vector<VPoly> buchberger(std::vector<VPoly> gens, const ModuleOrder& ord, bool rank_one) {
    std::vector<VPoly> g;
    for (auto& v : gens)
        if (!v.empty()) g.push_back(vp_monic(std::move(v)));

    // Pending S-pairs keyed by (lcm degree, i, j): the normal selection
    // strategy, with the index pair as deterministic tie-break.
    std::set<std::tuple<int, int, int>> queue;
    std::set<std::pair<int, int>> pending;
    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            if (g[i].front().t.comp != g[j].front().t.comp) continue;
            int deg = mono_degree(mono_lcm(g[i].front().t.mono, g[j].front().t.mono));
            queue.insert({deg, i, j});
            pending.insert({i, j});
        }
    };
    for (int j = 0; j < static_cast<int>(g.size()); ++j) push_pairs(j);

    while (!queue.empty()) {
        auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({i, j});

        const ModTerm& li = g[i].front().t;
        const ModTerm& lj = g[j].front().t;
        if (rank_one && mono_coprime(li.mono, lj.mono)) continue;

        Monomial lcm = mono_lcm(li.mono, lj.mono);
        bool chained = false;
        for (int k = 0; k < static_cast<int>(g.size()) && !chained; ++k) {
            if (k == i || k == j) continue;
            const ModTerm& lk = g[k].front().t;
            if (lk.comp != li.comp || !mono_divides(lk.mono, lcm)) continue;
            auto ik = std::minmax(i, k);
            auto jk = std::minmax(j, k);
            if (!pending.count({ik.first, ik.second}) && !pending.count({jk.first, jk.second}))
                chained = true;
        }
        if (chained) continue;

        VPoly rem = divide(s_pair(g[i], g[j], ord), g, ord, false).remainder;
        if (!rem.empty()) {
            g.push_back(vp_monic(std::move(rem)));
            push_pairs(static_cast<int>(g.size()) - 1);
        }
    }
    return g;
}

std::vector<VPoly> interreduce(std::vector<VPoly> basis, const ModuleOrder& ord) {
    std::vector<VPoly> g;
    for (auto& v : basis)
        if (!v.empty()) g.push_back(vp_monic(std::move(v)));

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < g.size(); ++i) {
            VPoly r = divide(g[i], g, ord, false, static_cast<int>(i)).remainder;
            if (r == g[i]) continue;
            changed = true;
            if (r.empty())
                g.erase(g.begin() + static_cast<long>(i));
            else
                g[i] = vp_monic(std::move(r));
            break;
        }
    }
    std::sort(g.begin(), g.end(),
              [&](const VPoly& a, const VPoly& b) { return ord.greater(a.front().t, b.front().t); });
    return g;
}

void arrange_for_schreyer(std::vector<VPoly>& basis, int nvars) {
    MonomialOrder lex = MonomialOrder::lex(nvars);
    std::sort(basis.begin(), basis.end(), [&](const VPoly& a, const VPoly& b) {
        const ModTerm& la = a.front().t;
        const ModTerm& lb = b.front().t;
        if (la.comp != lb.comp) return la.comp < lb.comp;
        return lex.compare(la.mono, lb.mono) > 0;
    });
}

SchreyerLevel schreyer_syzygies(const std::vector<VPoly>& gb,
                                const std::shared_ptr<const ModuleOrder>& ord, int nvars) {
    std::vector<ModTerm> labels;
    labels.reserve(gb.size());
    for (const auto& g : gb) labels.push_back(g.front().t);
    auto next = std::make_shared<SchreyerOrder>(labels, ord);

    std::vector<VPoly> syz;
    int n = static_cast<int>(gb.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (gb[i].front().t.comp != gb[j].front().t.comp) continue;
            Monomial lcm = mono_lcm(gb[i].front().t.mono, gb[j].front().t.mono);
            Reduction red = divide(s_pair(gb[i], gb[j], *ord), gb, *ord, true);
            if (!red.remainder.empty())
                throw std::logic_error("S-pair of a Groebner basis did not reduce to zero");
            // s_ij = (lcm/lm_i)/lc_i e_i - (lcm/lm_j)/lc_j e_j - sum cof_k e_k
            std::vector<VTerm> terms;
            terms.push_back({ModTerm{i, mono_quotient(lcm, gb[i].front().t.mono)},
                             Rational(make_rational(1) / gb[i].front().c)});
            terms.push_back({ModTerm{j, mono_quotient(lcm, gb[j].front().t.mono)},
                             Rational(make_rational(-1) / gb[j].front().c)});
            for (int k = 0; k < n; ++k)
                for (const auto& [m, c] : red.cofactors[k])
                    terms.push_back({ModTerm{k, m}, Rational(-c)});
            std::sort(terms.begin(), terms.end(),
                      [&](const VTerm& a, const VTerm& b) { return next->greater(a.t, b.t); });
            // Combine duplicates (a cofactor can land on e_i or e_j).
            VPoly s;
            for (auto& t : terms) {
                if (!s.empty() && s.back().t == t.t) {
                    s.back().c += t.c;
                    if (is_zero(s.back().c)) s.pop_back();
                } else {
                    s.push_back(std::move(t));
                }
            }
            if (!s.empty()) syz.push_back(std::move(s));
        }
    }

    syz = interreduce(std::move(syz), *next);
    arrange_for_schreyer(syz, nvars);
    return {std::move(syz), next};
}

}  // namespace pervcoh::detail
