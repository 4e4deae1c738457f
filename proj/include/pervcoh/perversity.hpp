#pragma once

#include <optional>

#include "pervcoh/scenario.hpp"

namespace pervcoh {

// Cohomology outside the stratification: the perversity conditions are only
// meaningful for complexes whose cohomology supports are unions of stratum
// closures, so the checkers refuse to answer instead of guessing.
struct NotStratifiedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Witness {
    std::string stratum;          // empty when the failure is not stratum-local
    int degree = 0;               // cohomological degree k
    std::optional<int> computed;  // offending computed quantity
    std::optional<int> required;  // bound it had to satisfy
    std::string note;
};

struct Verdict {
    bool result = true;
    std::string route;
    std::vector<Witness> witnesses;
};

// p<=0 side: at the generic point of each stratum x, cohomology must vanish
// above degree p(dim x). Evaluated per stratum via ann(H^k) <= I_x, and
// cross-checked against the global form k <= p(dim supp H^k); for monotone
// perversities the two must agree, and a mismatch is an internal error.
Verdict check_le0(const FreeComplex& F, const Scenario& S);

// p>=0 side, via duality: for every stratum x and degree k,
// dim(supp H^k(DF) meet closure(x)) <= -p(dim x) - k.
Verdict check_ge0(const FreeComplex& F, const Scenario& S);

// Both sides; witnesses merged (le0 first).
Verdict is_perverse(const FreeComplex& F, const Scenario& S);

// Concentration of one complex against one measuring subvariety. This side of
// the theory never looks at the perversity.
struct ConcentrationRecord {
    std::string candidate;
    bool ge0 = true;  // local cohomology along Z lives in degrees >= 0
    bool le0 = true;  // codim(supp H^k meet Z in supp H^k) >= k for H^k != 0
    std::vector<int> uncovered_degrees;  // nonzero H^k whose support misses Z
    std::vector<Witness> witnesses;
};

ConcentrationRecord measuring_concentration(const MeasuringCandidate& Z, const FreeComplex& F,
                                            const Scenario& S);

struct ConcentrationResult {
    bool concentrated = true;              // every member passed ge0 and le0
    bool family_coverage_violation = false;  // some nonzero H^k met by no member
    std::vector<ConcentrationRecord> records;
    std::vector<Witness> witnesses;  // merged member failures + coverage gaps
};

ConcentrationResult family_concentration(const std::vector<const MeasuringCandidate*>& family,
                                         const FreeComplex& F, const Scenario& S);

}  // namespace pervcoh
