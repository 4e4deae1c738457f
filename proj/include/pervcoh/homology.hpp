#pragma once

#include <optional>

#include "pervcoh/complexes.hpp"
#include "pervcoh/groebner.hpp"
#include "pervcoh/presented.hpp"

namespace pervcoh {

// H^k(C) = ker d^k / im d^{k-1}, presented on the kernel generators: the
// ambient rank is the number of syzygy generators of the kernel and the
// presentation columns are the lifted relations (image + kernel overlaps).
PresentedModule cohomology_module(const FreeComplex& C, int k, std::string provenance = {});

bool is_zero_module(const PresentedModule& M);

// ann(M) = { f : f * S^rank <= im(presentation) }, by the stacked-identity
// syzygy construction. ann(0) = (1).
Ideal annihilator(const PresentedModule& M);

// Free resolution ... -> F_2 -> F_1 -> F_0 -> M -> 0 placed in cohomological
// degrees [-length, 0] (F_i sits in degree -i). Schreyer's construction with
// levelwise interreduction and (component, lex-desc) arrangement, which keeps
// length <= nvars.
FreeComplex free_resolution(const PresentedModule& M);

// dim supp(M) cut down to V(restrict): dim S/(ann M + restrict); nullopt for
// the empty support (M = 0 or the intersection is empty).
std::optional<int> support_dimension(const PresentedModule& M, const Ideal& restrict_to);
std::optional<int> support_dimension(const PresentedModule& M);

// Smallest i with H^i_Z(C) != 0, as min_k(-k - dim(V(Z) meet supp H^k(DC)));
// nullopt encodes +infinity (no local cohomology along Z at all).
std::optional<int> local_cohomology_min_degree(const Ideal& Z, const FreeComplex& C,
                                               const DualizingData& D);

}  // namespace pervcoh
