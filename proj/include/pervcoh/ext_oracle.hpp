#pragma once

#include <optional>
#include <utility>

#include "pervcoh/homology.hpp"

namespace pervcoh {

enum class OracleVerdict { nonvanishing_detected, vanishing_up_to_t_max, inconclusive };

struct OracleResult {
    OracleVerdict verdict = OracleVerdict::inconclusive;
    int t_max = 0;
    std::optional<int> witness_t;  // least t with Ext^i(S/J_t, C) != 0
    bool stabilized = false;       // a vanishing answer backed by >= 2 samples
};

// Probes colim_t Ext^i(S/J_t, C) with J_t = (f^t : f in J) for t = 1..t_max,
// through a free resolution of S/J_t and the total Hom complex. Nonvanishing
// at any probed t settles the colimit (the transition maps are eventually
// injective on the classes we care about); all-zero answers are reported as
// vanishing up to t_max. The window is interface-stable but currently does
// not constrain the computation. Throws std::invalid_argument for t_max < 1.
OracleResult ext_colimit_oracle(const std::vector<Polynomial>& J, const FreeComplex& C, int i,
                                int t_max, std::optional<std::pair<int, int>> window = {});

}  // namespace pervcoh
