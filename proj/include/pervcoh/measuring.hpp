#pragma once

#include <random>

#include "pervcoh/perversity.hpp"

namespace pervcoh {

// Def-style check of one candidate: for every stratum x whose closure meets
// Z, (i) dim(closure(x) meet Z) = p(dim x) + dim x, and (ii) the prefix of
// the cutting list of length -p(dim x) cuts closure(x) down to exactly that
// intersection (up to radical). Witness fields: computed/required carry the
// dimensions of (i), the note explains (ii) failures.
Verdict is_measuring(const MeasuringCandidate& Z, const Scenario& S);

// Every member measuring, plus coverage: each stratum closure must meet at
// least one member. The empty family is not a measuring family.
Verdict is_measuring_family(const std::vector<const MeasuringCandidate*>& family,
                            const Scenario& S);

struct ConstructOptions {
    std::uint64_t seed = 0;
    std::vector<Polynomial> pool;  // tried first, in order, at every step
    int max_degree = 2;            // degree cap for generated cut candidates
    int max_attempts = 200;        // per induction step
};

struct ConstructResult {
    bool success = false;
    MeasuringCandidate candidate;
    int failed_step = -1;        // induction step label d+1 when !success
    std::string failure_reason;  // last violated condition
};

// Inductive construction: walk d = -1 .. dim X - 1 with p(-1) = 0; whenever
// p(d) - p(d+1) = 1, adjoin a cut f vanishing on every stratum of dimension
// <= d that drops dim(closure(x) meet Z) by exactly one on every stratum of
// dimension > d while keeping it nonempty. Pool entries are tried first,
// then seeded random small-coefficient combinations of low-degree generators
// of the product of the low strata ideals. Deterministic for a fixed seed.
ConstructResult construct_measuring(const Scenario& S, const ConstructOptions& opt);

}  // namespace pervcoh
