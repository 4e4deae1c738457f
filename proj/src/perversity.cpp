#include "pervcoh/perversity.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pervcoh/homology.hpp"

namespace pervcoh {

namespace {

// Nonzero cohomology modules of C, keyed by degree.
std::map<int, PresentedModule> nonzero_cohomology(const FreeComplex& C, const char* tag) {
    std::map<int, PresentedModule> out;
    if (C.is_zero()) return out;
    for (int k = C.min_degree(); k <= C.max_degree(); ++k) {
        PresentedModule M = cohomology_module(C, k, std::string(tag) + "^" + std::to_string(k));
        if (!is_zero_module(M)) out.emplace(k, std::move(M));
    }
    return out;
}

void require_stratified(const std::map<int, PresentedModule>& H, const Scenario& S,
                        const char* what) {
    for (const auto& [k, M] : H) {
        SupportDecomposition dec = stratified_support_check(M, S);
        if (!dec.stratified) {
            std::ostringstream msg;
            msg << "support of " << what << "^" << k
                << " is not a union of stratum closures; the complex is not "
                   "constructible along this stratification";
            throw NotStratifiedError(msg.str());
        }
    }
}

bool ideal_contained(const Ideal& inner, const Ideal& outer) {
    const auto& gb = default_groebner_basis(outer);
    MonomialOrder ord = MonomialOrder::grevlex(inner.ring()->nvars());
    for (const auto& g : inner.gens())
        if (!normal_form(g, gb, ord).is_zero()) return false;
    return true;
}

}  // namespace

Verdict check_le0(const FreeComplex& F, const Scenario& S) {
    validate_complex(F);
    auto H = nonzero_cohomology(F, "H");
    require_stratified(H, S, "H");

    std::map<int, Ideal> anns;
    for (const auto& [k, M] : H) anns.emplace(k, annihilator(M));

    // Route (a): per-stratum generic-point bound.
    Verdict v;
    v.route = "stratum restriction (cross-checked against support dimension)";
    bool a_ok = true;
    for (const auto& s : S.strata) {
        std::optional<int> bound;
        for (const auto& [k, ann] : anns)
            if (ideal_contained(ann, s.ideal)) bound = k;  // ascending k: last wins
        if (!bound) continue;
        int allowed = S.perversity.at(s.declared_dim);
        if (*bound > allowed) {
            a_ok = false;
            Witness w;
            w.stratum = s.name;
            w.degree = *bound;
            w.computed = *bound;
            w.required = allowed;
            w.note = "cohomology at the generic point of " + s.name + " survives to degree " +
                     std::to_string(*bound) + " > p(" + std::to_string(s.declared_dim) + ") = " +
                     std::to_string(allowed);
            v.witnesses.push_back(std::move(w));
        }
    }

    // Route (b): k <= p(dim supp H^k). Equivalent to (a) for monotone p.
    bool b_ok = true;
    for (const auto& [k, M] : H) {
        auto sd = support_dimension(M);
        if (!sd) continue;  // cannot happen for a nonzero module
        if (S.perversity.at(*sd) < k) b_ok = false;
    }

    if (S.flags.monotone && a_ok != b_ok)
        throw std::logic_error(
            "perversity check routes disagreed for a monotone perversity; "
            "this is a bug in the checker");

    v.result = a_ok;
    return v;
}

Verdict check_ge0(const FreeComplex& F, const Scenario& S) {
    validate_complex(F);
    FreeComplex DF = dualize(F, S.dualizing);
    auto H = nonzero_cohomology(DF, "DH");
    require_stratified(H, S, "H(D-)");

    Verdict v;
    v.route = "costalk support bound";
    for (const auto& s : S.strata) {
        int p = S.perversity.at(s.declared_dim);
        for (const auto& [k, M] : H) {
            auto sd = support_dimension(M, s.ideal);
            if (!sd) continue;  // stratum closure misses the support
            int required = -p - k;
            if (*sd > required) {
                v.result = false;
                Witness w;
                w.stratum = s.name;
                w.degree = k;
                w.computed = *sd;
                w.required = required;
                w.note = "dim(supp H^" + std::to_string(k) + "(DF) meet closure(" + s.name +
                         ")) = " + std::to_string(*sd) + " > " + std::to_string(required);
                v.witnesses.push_back(std::move(w));
            }
        }
    }
    return v;
}

Verdict is_perverse(const FreeComplex& F, const Scenario& S) {
    Verdict le = check_le0(F, S);
    Verdict ge = check_ge0(F, S);
    Verdict v;
    v.result = le.result && ge.result;
    v.route = "perverse = (p<=0) and (p>=0)";
    for (auto& w : le.witnesses) {
        w.note = "[p<=0] " + w.note;
        v.witnesses.push_back(std::move(w));
    }
    for (auto& w : ge.witnesses) {
        w.note = "[p>=0] " + w.note;
        v.witnesses.push_back(std::move(w));
    }
    return v;
}

ConcentrationRecord measuring_concentration(const MeasuringCandidate& Z, const FreeComplex& F,
                                            const Scenario& S) {
    validate_complex(F);
    ConcentrationRecord rec;
    rec.candidate = Z.name;

    auto lcmd = local_cohomology_min_degree(Z.ideal, F, S.dualizing);
    if (lcmd && *lcmd < 0) {
        rec.ge0 = false;
        Witness w;
        w.stratum = Z.name;
        w.degree = *lcmd;
        w.computed = *lcmd;
        w.required = 0;
        w.note = "local cohomology along " + Z.name + " first appears in degree " +
                 std::to_string(*lcmd) + " < 0";
        rec.witnesses.push_back(std::move(w));
    }

    auto H = nonzero_cohomology(F, "H");
    for (const auto& [k, M] : H) {
        auto sdZ = support_dimension(M, Z.ideal);
        if (!sdZ) {
            rec.uncovered_degrees.push_back(k);
            continue;
        }
        auto sd = support_dimension(M);
        int drop = *sd - *sdZ;  // codim of Z-slice inside the support
        if (drop > -k) {
            rec.le0 = false;
            Witness w;
            w.stratum = Z.name;
            w.degree = k;
            w.computed = drop;
            w.required = -k;
            w.note = "supp H^" + std::to_string(k) + " drops " + std::to_string(drop) +
                     " dimension(s) along " + Z.name + ", allowed at most " +
                     std::to_string(-k);
            rec.witnesses.push_back(std::move(w));
        }
    }
    return rec;
}

ConcentrationResult family_concentration(const std::vector<const MeasuringCandidate*>& family,
                                         const FreeComplex& F, const Scenario& S) {
    ConcentrationResult out;
    std::map<int, int> misses;  // degree -> number of members missing it
    for (const auto* Z : family) {
        ConcentrationRecord rec = measuring_concentration(*Z, F, S);
        out.concentrated = out.concentrated && rec.ge0 && rec.le0;
        for (int k : rec.uncovered_degrees) ++misses[k];
        for (const auto& w : rec.witnesses) out.witnesses.push_back(w);
        out.records.push_back(std::move(rec));
    }

    auto H = nonzero_cohomology(F, "H");
    for (const auto& [k, M] : H) {
        auto it = misses.find(k);
        bool uncovered = family.empty() || (it != misses.end() &&
                                            it->second == static_cast<int>(family.size()));
        if (uncovered) {
            out.family_coverage_violation = true;
            Witness w;
            w.degree = k;
            w.note = "no family member meets supp H^" + std::to_string(k);
            out.witnesses.push_back(std::move(w));
        }
    }
    return out;
}

}  // namespace pervcoh
