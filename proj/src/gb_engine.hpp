#pragma once

// Internal Buchberger engine shared by the Groebner-basis operations and the
// Schreyer resolution builder. Everything here works on "vector polynomials":
// flat term lists over a free module, kept strictly descending in the active
// module order.

#include <memory>
#include <vector>

#include "pervcoh/poly.hpp"

namespace pervcoh::detail {

struct ModTerm {
    int comp = 0;
    Monomial mono;

    bool operator==(const ModTerm& o) const { return comp == o.comp && mono == o.mono; }
};

class ModuleOrder {
  public:
    virtual ~ModuleOrder() = default;
    virtual int compare(const ModTerm& a, const ModTerm& b) const = 0;
    bool greater(const ModTerm& a, const ModTerm& b) const { return compare(a, b) > 0; }
};

// Position-over-term: e_0 > e_1 > ..., ties broken by the monomial order.
class PotOrder final : public ModuleOrder {
  public:
    explicit PotOrder(MonomialOrder ord) : ord_(std::move(ord)) {}
    int compare(const ModTerm& a, const ModTerm& b) const override {
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return ord_.compare(a.mono, b.mono);
    }

  private:
    MonomialOrder ord_;
};

// Order induced by Groebner-basis leads one level down: x^a e_i > x^b e_j
// iff x^a * label_i > x^b * label_j in the parent order, ties to the smaller
// index. This is what makes Schreyer's s_{ij} a Groebner basis of the
// syzygy module.
class SchreyerOrder final : public ModuleOrder {
  public:
    SchreyerOrder(std::vector<ModTerm> labels, std::shared_ptr<const ModuleOrder> parent)
        : labels_(std::move(labels)), parent_(std::move(parent)) {}

    int compare(const ModTerm& a, const ModTerm& b) const override {
        const ModTerm& la = labels_.at(a.comp);
        const ModTerm& lb = labels_.at(b.comp);
        ModTerm ia{la.comp, mono_mul(a.mono, la.mono)};
        ModTerm ib{lb.comp, mono_mul(b.mono, lb.mono)};
        int c = parent_->compare(ia, ib);
        if (c != 0) return c;
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return 0;
    }

  private:
    std::vector<ModTerm> labels_;
    std::shared_ptr<const ModuleOrder> parent_;
};

struct VTerm {
    ModTerm t;
    Rational c;

    bool operator==(const VTerm& o) const { return t == o.t && c == o.c; }
};

using VPoly = std::vector<VTerm>;  // strictly descending, no zero coefficients

VPoly vp_from_free(const FreeElement& v, const ModuleOrder& ord);
VPoly vp_from_poly(const Polynomial& p, int comp, const ModuleOrder& ord);
FreeElement vp_to_free(const VPoly& v, const RingPtr& ring, int rank);
Polynomial vp_to_poly(const VPoly& v, const RingPtr& ring);

inline const VTerm& vp_lead(const VPoly& v) { return v.front(); }
VPoly vp_monic(VPoly v);
// a - c * x^m * b
VPoly vp_sub_scaled(const VPoly& a, const VPoly& b, const Monomial& m, const Rational& c,
                    const ModuleOrder& ord);

struct Reduction {
    VPoly remainder;
    // Raw cofactor terms per basis element: v = sum_k cof_k * basis_k + rem.
    std::vector<std::vector<std::pair<Monomial, Rational>>> cofactors;
};

// Full division: every term of the remainder is irreducible modulo the basis
// leads. skip (if >= 0) excludes one basis element, which interreduction uses.
Reduction divide(const VPoly& v, const std::vector<VPoly>& basis, const ModuleOrder& ord,
                 bool record_cofactors, int skip = -1);

// Buchberger with the chain criterion; the coprime-lead criterion is applied
// only when rank_one is set, since it is unsound for module components.
std::vector<VPoly> buchberger(std::vector<VPoly> gens, const ModuleOrder& ord, bool rank_one);

// Any Groebner basis -> the reduced one, sorted by decreasing lead.
std::vector<VPoly> interreduce(std::vector<VPoly> basis, const ModuleOrder& ord);

struct SchreyerLevel {
    // Interreduced syzygy basis, arranged by (lead component asc, lead
    // monomial lex-desc): the arrangement that keeps resolution length
    // within the number of variables.
    std::vector<VPoly> syzygies;
    std::shared_ptr<const ModuleOrder> order;
};

// gb must be a Groebner basis under ord; returns a Groebner basis of its
// syzygies under the induced Schreyer order.
SchreyerLevel schreyer_syzygies(const std::vector<VPoly>& gb,
                                const std::shared_ptr<const ModuleOrder>& ord, int nvars);

// Rearrangement used between resolution levels (and for its first level).
void arrange_for_schreyer(std::vector<VPoly>& basis, int nvars);

}  // namespace pervcoh::detail
