#pragma once

#include <optional>
#include <vector>

#include "pervcoh/ideal.hpp"

namespace pervcoh {

// Reduced Groebner basis: monic, mutually fully reduced, sorted by strictly
// decreasing lead term. Deterministic for fixed input and order. Module
// bases use position-over-term on top of the given monomial order, with
// lower component index more significant.
std::vector<Polynomial> groebner_basis(const Ideal& I, const MonomialOrder& ord);
std::vector<FreeElement> groebner_basis(const Submodule& M, const MonomialOrder& ord);

// Cached basis in the ring's default grevlex order.
const std::vector<Polynomial>& default_groebner_basis(const Ideal& I);
const std::vector<FreeElement>& default_groebner_basis(const Submodule& M);

// Remainder of full division; the second argument must be a Groebner basis
// for the result to be a normal form.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gb,
                       const MonomialOrder& ord);
FreeElement normal_form(const FreeElement& v, const std::vector<FreeElement>& gb,
                        const MonomialOrder& ord);

bool ideal_contains(const Ideal& I, const Polynomial& f);
bool submodule_contains(const Submodule& M, const FreeElement& v);
bool is_unit_ideal(const Ideal& I);

// f in rad(I), by the Rabinowitsch trick in an extended ring.
bool radical_membership(const Polynomial& f, const Ideal& I);

// Krull dimension of S/I; nullopt encodes dim(empty) = -infinity when I = (1).
std::optional<int> dimension(const Ideal& I);

// Generators of the syzygy module of the *given generators* (kernel of
// S^{#gens} -> S^rank), computed by the block/elimination embedding.
Submodule syzygy_module(const Submodule& M);
Submodule syzygy_module_of_polys(const RingPtr& ring, const std::vector<Polynomial>& gens);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);

}  // namespace pervcoh
