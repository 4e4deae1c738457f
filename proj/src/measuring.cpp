#include "pervcoh/measuring.hpp"

#include <optional>
#include <sstream>

namespace pervcoh {

namespace {

bool radically_equal(const Ideal& A, const Ideal& B) {
    for (const auto& g : A.gens())
        if (!radical_membership(g, B)) return false;
    for (const auto& g : B.gens())
        if (!radical_membership(g, A)) return false;
    return true;
}

bool plainly_in(const Polynomial& f, const Ideal& I) {
    MonomialOrder ord = MonomialOrder::grevlex(I.ring()->nvars());
    return normal_form(f, default_groebner_basis(I), ord).is_zero();
}

Witness stratum_witness(const std::string& stratum, std::optional<int> computed,
                        std::optional<int> required, std::string note) {
    Witness w;
    w.stratum = stratum;
    w.computed = computed;
    w.required = required;
    w.note = std::move(note);
    return w;
}

}  // namespace

Verdict is_measuring(const MeasuringCandidate& Z, const Scenario& S) {
    Verdict v;
    v.route = "dimension and cutting-prefix conditions";

    if (S.dim_x >= 0 && static_cast<int>(Z.cutting.size()) > S.dim_x)
        v.witnesses.push_back(stratum_witness(
            "", static_cast<int>(Z.cutting.size()), S.dim_x,
            "cutting list longer than dim X"));

    std::vector<Polynomial> cg = S.variety_ideal.gens();
    for (const auto& c : Z.cutting) cg.push_back(c.function);
    if (!radically_equal(Ideal(S.ring, std::move(cg)), Z.ideal))
        v.witnesses.push_back(stratum_witness(
            "", std::nullopt, std::nullopt,
            "I_Z does not define V(I_X + cutting functions) up to radical"));

    for (const auto& s : S.strata) {
        Ideal meet = ideal_sum(s.ideal, Z.ideal);
        auto dm = dimension(meet);
        if (!dm) continue;  // closure misses Z: no condition imposed
        int p = S.perversity.at(s.declared_dim);
        int expected = p + s.declared_dim;
        if (*dm != expected)
            v.witnesses.push_back(stratum_witness(
                s.name, *dm, expected,
                "dim(closure(" + s.name + ") meet Z) = " + std::to_string(*dm) +
                    ", expected p(" + std::to_string(s.declared_dim) + ") + " +
                    std::to_string(s.declared_dim) + " = " + std::to_string(expected)));

        int prefix_len = -p;
        if (static_cast<int>(Z.cutting.size()) < prefix_len) {
            v.witnesses.push_back(stratum_witness(
                s.name, static_cast<int>(Z.cutting.size()), prefix_len,
                "missing cutting data: stratum " + s.name + " needs a prefix of length " +
                    std::to_string(prefix_len)));
            continue;
        }
        std::vector<Polynomial> pg = s.ideal.gens();
        for (int i = 0; i < prefix_len; ++i) pg.push_back(Z.cutting[i].function);
        if (!radically_equal(Ideal(S.ring, std::move(pg)), meet))
            v.witnesses.push_back(stratum_witness(
                s.name, std::nullopt, std::nullopt,
                "the first " + std::to_string(prefix_len) +
                    " cutting function(s) do not cut closure(" + s.name +
                    ") down to its intersection with Z"));
    }

    v.result = v.witnesses.empty();
    return v;
}

Verdict is_measuring_family(const std::vector<const MeasuringCandidate*>& family,
                            const Scenario& S) {
    Verdict v;
    v.route = "member conditions + stratum coverage";
    if (family.empty()) {
        v.result = false;
        v.witnesses.push_back(stratum_witness("", std::nullopt, std::nullopt,
                                              "the empty family measures nothing"));
        return v;
    }
    for (const auto* Z : family) {
        Verdict sub = is_measuring(*Z, S);
        for (auto& w : sub.witnesses) {
            w.note = Z->name + ": " + w.note;
            v.witnesses.push_back(std::move(w));
        }
    }
    for (const auto& s : S.strata) {
        bool covered = false;
        for (const auto* Z : family)
            if (dimension(ideal_sum(s.ideal, Z->ideal))) {
                covered = true;
                break;
            }
        if (!covered)
            v.witnesses.push_back(stratum_witness(
                s.name, std::nullopt, std::nullopt,
                "no family member meets closure(" + s.name + ")"));
    }
    v.result = v.witnesses.empty();
    return v;
}

ConstructResult construct_measuring(const Scenario& S, const ConstructOptions& opt) {
    ConstructResult res;
    res.candidate.name = "constructed";
    res.candidate.ideal = Ideal(S.ring, {});

    if (S.dim_x < 0) {
        res.failed_step = 0;
        res.failure_reason = "the variety is empty";
        return res;
    }
    if (!S.flags.monotone || !S.flags.comonotone || !S.flags.in_range) {
        res.failed_step = 0;
        res.failure_reason = "perversity must be monotone, comonotone and in range";
        return res;
    }

    auto p_at = [&](int d) { return d < 0 ? 0 : S.perversity.at(d); };
    std::vector<Polynomial> z_gens = S.variety_ideal.gens();
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> coeff(-2, 2);

    for (int d = -1; d < S.dim_x; ++d) {
        if (p_at(d) - p_at(d + 1) == 0) continue;  // flags force the delta into {0,1}

        Ideal z_cur(S.ring, z_gens);
        std::vector<const Stratum*> low, high;
        for (const auto& s : S.strata) (s.declared_dim <= d ? low : high).push_back(&s);

        struct HighInfo {
            const Stratum* s;
            Ideal meet;
            int dim;
        };
        std::vector<HighInfo> hi;
        for (const auto* s : high) {
            Ideal meet = ideal_sum(s->ideal, z_cur);
            auto dm = dimension(meet);
            if (!dm) {
                res.failed_step = d + 1;
                res.failure_reason =
                    "closure(" + s->name + ") meet Z is already empty before cutting";
                return res;
            }
            hi.push_back({s, std::move(meet), *dm});
        }

        // Random candidates come from the ideal of the union of the low
        // closures (the intersection of their ideals), so they vanish on
        // every stratum of dimension <= d by construction. The reduced basis
        // keeps the generator degrees as small as possible.
        std::vector<Polynomial> basis;
        if (low.empty()) {
            basis.push_back(Polynomial::constant(S.ring, make_rational(1)));
            for (int var = 0; var < S.ring->nvars(); ++var)
                for (int e = 1; e <= opt.max_degree; ++e)
                    basis.push_back(Polynomial::variable(S.ring, var, e));
        } else {
            Ideal vanishing = low[0]->ideal;
            for (std::size_t i = 1; i < low.size(); ++i)
                vanishing = ideal_intersection(vanishing, low[i]->ideal);
            basis = default_groebner_basis(vanishing);
            std::erase_if(basis, [&](const Polynomial& f) {
                return f.is_zero() || f.total_degree() > opt.max_degree;
            });
        }

        std::string last_reason = "no cut candidates within the degree bound";
        auto acceptable = [&](const Polynomial& f) {
            if (f.is_zero()) {
                last_reason = "candidate is the zero polynomial";
                return false;
            }
            for (const auto* s : low)
                if (!plainly_in(f, s->ideal)) {
                    last_reason = "candidate does not vanish on stratum " + s->name;
                    return false;
                }
            for (const auto& h : hi) {
                auto dj = dimension(ideal_sum(h.meet, Ideal(S.ring, {f})));
                if (!dj) {
                    last_reason = "cut empties closure(" + h.s->name + ") meet Z";
                    return false;
                }
                if (*dj != h.dim - 1) {
                    last_reason = "cut moves dim(closure(" + h.s->name + ") meet Z) from " +
                                  std::to_string(h.dim) + " to " + std::to_string(*dj) +
                                  ", not by exactly one";
                    return false;
                }
            }
            return true;
        };

        std::optional<Polynomial> found;
        int tried = 0;
        for (const auto& f : opt.pool) {
            if (tried >= opt.max_attempts) break;
            ++tried;
            if (acceptable(f)) {
                found = f;
                break;
            }
        }
        while (!found && tried < opt.max_attempts && !basis.empty()) {
            ++tried;
            Polynomial f = Polynomial::zero(S.ring);
            for (const auto& g : basis)
                f = f + Polynomial::constant(S.ring, make_rational(coeff(rng))) * g;
            if (acceptable(f)) found = f;
        }
        if (!found) {
            res.failed_step = d + 1;
            res.failure_reason = last_reason;
            return res;
        }
        z_gens.push_back(*found);
        res.candidate.cutting.push_back({*found, d + 1});
    }

    res.candidate.ideal = Ideal(S.ring, z_gens);
    Verdict gate = is_measuring(res.candidate, S);
    if (!gate.result) {
        res.failed_step = S.dim_x;
        res.failure_reason = "final verification failed: " +
                             (gate.witnesses.empty() ? std::string("unknown")
                                                     : gate.witnesses.front().note);
        return res;
    }
    res.success = true;
    return res;
}

}  // namespace pervcoh
