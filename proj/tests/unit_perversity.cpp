#include "doctest.h"

#include "pervcoh/perversity.hpp"

using namespace pervcoh;

namespace {

std::string data_path(const std::string& name) {
    return std::string(PERVCOH_DATA_DIR) + "/" + name;
}

const FreeComplex& named(const Scenario& S, const std::string& name) {
    const FreeComplex* C = S.find_complex(name);
    REQUIRE(C != nullptr);
    return *C;
}

}  // namespace

TEST_CASE("middle-perversity verdicts on the cone") {
    Scenario S = load_scenario(data_path("cone.json"));
    const FreeComplex& structure = named(S, "structure");

    SUBCASE("the shifted structure sheaf is perverse") {
        Verdict v = is_perverse(shift_complex(structure, 1), S);
        CHECK(v.result);
        CHECK(v.witnesses.empty());
        // the bundled pre-shifted copy agrees
        CHECK(is_perverse(named(S, "structure_shift1"), S).result);
    }

    SUBCASE("the unshifted structure sheaf fails the upper bound on the open stratum") {
        Verdict le = check_le0(structure, S);
        CHECK_FALSE(le.result);
        REQUIRE(le.witnesses.size() == 1);
        CHECK(le.witnesses[0].stratum == "open");
        CHECK(le.witnesses[0].degree == 0);
        CHECK(le.witnesses[0].computed == 0);
        CHECK(le.witnesses[0].required == -1);
        CHECK(check_ge0(structure, S).result);  // lower bound alone is fine
        CHECK_FALSE(is_perverse(structure, S).result);
    }

    SUBCASE("shifting by 2 overshoots and fails the lower bound") {
        FreeComplex C2 = shift_complex(structure, 2);
        CHECK(check_le0(C2, S).result);
        Verdict ge = check_ge0(C2, S);
        CHECK_FALSE(ge.result);
        bool open_k0 = false;
        for (const auto& w : ge.witnesses)
            if (w.stratum == "open" && w.degree == 0) {
                open_k0 = true;
                CHECK(w.computed == 2);
                CHECK(w.required == 1);
            }
        CHECK(open_k0);
    }

    SUBCASE("the skyscraper is perverse exactly in its natural position") {
        const FreeComplex& sky = named(S, "skyscraper");
        for (int s : {-1, 0, 1, 2}) {
            CAPTURE(s);
            CHECK(is_perverse(shift_complex(sky, s), S).result == (s == 0));
        }
    }
}

TEST_CASE("verdicts on the smooth fixtures") {
    Scenario line = load_scenario(data_path("line.json"));
    CHECK(is_perverse(shift_complex(named(line, "structure"), 1), line).result);
    CHECK_FALSE(is_perverse(named(line, "structure"), line).result);
    CHECK(is_perverse(named(line, "skyscraper"), line).result);

    Scenario plane = load_scenario(data_path("plane.json"));
    CHECK(is_perverse(shift_complex(named(plane, "structure"), 2), plane).result);
    CHECK_FALSE(is_perverse(shift_complex(named(plane, "structure"), 1), plane).result);
    CHECK(is_perverse(named(plane, "skyscraper"), plane).result);
    CHECK_FALSE(is_perverse(shift_complex(named(plane, "skyscraper"), 1), plane).result);
}

TEST_CASE("cohomology off the stratification is refused") {
    Scenario S = load_scenario(data_path("failing/off_stratification.json"));
    const FreeComplex& C = named(S, "offstrat");
    CHECK_THROWS_AS(is_perverse(C, S), NotStratifiedError);
    CHECK_THROWS_AS(check_le0(C, S), NotStratifiedError);
    CHECK_THROWS_AS(check_ge0(C, S), NotStratifiedError);
}

TEST_CASE("concentration along the ruling line of the cone") {
    Scenario S = load_scenario(data_path("cone.json"));
    const MeasuringCandidate* Z = S.find_measuring("line");
    REQUIRE(Z != nullptr);

    SUBCASE("shifted structure sheaf concentrates") {
        ConcentrationRecord r = measuring_concentration(*Z, shift_complex(named(S, "structure"), 1), S);
        CHECK(r.ge0);
        CHECK(r.le0);
        CHECK(r.uncovered_degrees.empty());
        CHECK(r.witnesses.empty());
    }

    SUBCASE("unshifted structure sheaf violates the upper bound") {
        ConcentrationRecord r = measuring_concentration(*Z, named(S, "structure"), S);
        CHECK(r.ge0);
        CHECK_FALSE(r.le0);
        bool deg0 = false;
        for (const auto& w : r.witnesses)
            if (w.degree == 0) {
                deg0 = true;
                CHECK(w.computed == 1);  // support drops by 1 along Z
                CHECK(w.required == 0);  // degree 0 allows no drop
            }
        CHECK(deg0);
    }

    SUBCASE("overshifted structure sheaf violates the lower bound") {
        ConcentrationRecord r = measuring_concentration(*Z, shift_complex(named(S, "structure"), 2), S);
        CHECK_FALSE(r.ge0);
    }

    SUBCASE("skyscraper concentrates without shift only") {
        CHECK(measuring_concentration(*Z, named(S, "skyscraper"), S).le0);
        CHECK(measuring_concentration(*Z, named(S, "skyscraper"), S).ge0);
        ConcentrationRecord up = measuring_concentration(*Z, shift_complex(named(S, "skyscraper"), 1), S);
        CHECK_FALSE((up.ge0 && up.le0));
    }
}

TEST_CASE("family concentration flags uncovered cohomology") {
    Scenario S = load_scenario(data_path("cone.json"));
    // a point far from the origin: misses the skyscraper's support entirely
    MeasuringCandidate far;
    far.name = "far_point";
    far.ideal = Ideal(S.ring, {parse_polynomial("x - 1", S.ring), parse_polynomial("y", S.ring),
                               parse_polynomial("z", S.ring)});

    const FreeComplex& sky = named(S, "skyscraper");
    ConcentrationResult alone = family_concentration({&far}, sky, S);
    CHECK(alone.family_coverage_violation);
    REQUIRE(alone.records.size() == 1);
    CHECK(alone.records[0].uncovered_degrees == std::vector<int>{0});

    // adding the honest ruling line restores coverage
    const MeasuringCandidate* Z = S.find_measuring("line");
    REQUIRE(Z != nullptr);
    ConcentrationResult both = family_concentration({&far, Z}, sky, S);
    CHECK_FALSE(both.family_coverage_violation);
    CHECK(both.concentrated);

    // the empty family covers nothing
    ConcentrationResult none = family_concentration({}, sky, S);
    CHECK(none.family_coverage_violation);
}

TEST_CASE("family concentration agrees with perversity on the cone fixtures") {
    Scenario S = load_scenario(data_path("cone.json"));
    const MeasuringCandidate* Z = S.find_measuring("line");
    REQUIRE(Z != nullptr);
    for (const auto& [name, C] : S.complexes)
        for (int s : {-1, 0, 1}) {
            CAPTURE(name);
            CAPTURE(s);
            FreeComplex F = shift_complex(C, s);
            ConcentrationResult con = family_concentration({Z}, F, S);
            Verdict pv = is_perverse(F, S);
            CHECK(pv.result == (con.concentrated && !con.family_coverage_violation));
        }
}
