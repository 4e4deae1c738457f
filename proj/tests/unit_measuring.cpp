#include "doctest.h"

#include "pervcoh/measuring.hpp"

using namespace pervcoh;

namespace {

std::string data_path(const std::string& name) {
    return std::string(PERVCOH_DATA_DIR) + "/" + name;
}

std::string candidate_text(const MeasuringCandidate& Z) {
    std::string out = "(";
    for (std::size_t i = 0; i < Z.ideal.gens().size(); ++i) {
        if (i) out += ", ";
        out += to_string(Z.ideal.gens()[i]);
    }
    out += ")";
    for (const auto& c : Z.cutting) out += " " + to_string(c.function) + "@" + std::to_string(c.step);
    return out;
}

}  // namespace

TEST_CASE("bundled candidates measure their scenarios") {
    for (auto [file, cand] : {std::pair<const char*, const char*>{"cone.json", "line"},
                              {"plane.json", "origin"},
                              {"line.json", "origin"}}) {
        CAPTURE(file);
        Scenario S = load_scenario(data_path(file));
        const MeasuringCandidate* Z = S.find_measuring(cand);
        REQUIRE(Z != nullptr);
        Verdict v = is_measuring(*Z, S);
        std::string first_note = v.witnesses.empty() ? "" : v.witnesses[0].note;
        CAPTURE(first_note);
        CHECK(v.result);
        CHECK(v.witnesses.empty());
        CHECK(is_measuring_family({Z}, S).result);
    }
}

TEST_CASE("wrong-dimensional candidates are rejected with the offending stratum") {
    Scenario S = load_scenario(data_path("plane.json"));
    MeasuringCandidate Z;
    Z.name = "axis";
    Z.ideal = Ideal(S.ring, {parse_polynomial("x", S.ring)});
    Z.cutting = {{parse_polynomial("x", S.ring), 1}};
    Verdict v = is_measuring(Z, S);
    CHECK_FALSE(v.result);
    // the open stratum needs dim(X meet Z) = p(2) + 2 = 0, but V(x) is a line
    bool found = false;
    for (const auto& w : v.witnesses)
        if (w.stratum == "open" && w.computed == 1 && w.required == 0) found = true;
    CHECK(found);
}

TEST_CASE("a too-short cutting list is reported as missing data") {
    Scenario S = load_scenario(data_path("plane.json"));
    MeasuringCandidate Z = *S.find_measuring("origin");
    Z.cutting.pop_back();  // open stratum needs a prefix of length -p(2) = 2
    Verdict v = is_measuring(Z, S);
    CHECK_FALSE(v.result);
    bool found = false;
    for (const auto& w : v.witnesses)
        if (w.note.find("missing cutting data") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("the empty family does not measure") {
    Scenario S = load_scenario(data_path("cone.json"));
    CHECK_FALSE(is_measuring_family({}, S).result);
}

TEST_CASE("construction on the plane follows the supplied pool") {
    Scenario S = load_scenario(data_path("plane.json"));
    ConstructOptions opt;
    opt.pool = {parse_polynomial("x + y", S.ring), parse_polynomial("x*y", S.ring)};
    ConstructResult res = construct_measuring(S, opt);
    CAPTURE(res.failure_reason);
    CAPTURE(res.failed_step);
    REQUIRE(res.success);
    REQUIRE(res.candidate.ideal.gens().size() == 2);
    CHECK(to_string(res.candidate.ideal.gens()[0]) == "x + y");
    CHECK(to_string(res.candidate.ideal.gens()[1]) == "x*y");
    REQUIRE(res.candidate.cutting.size() == 2);
    CHECK(res.candidate.cutting[0].step == 1);
    CHECK(res.candidate.cutting[1].step == 2);
    CHECK(is_measuring(res.candidate, S).result);
    const MeasuringCandidate* Zp = &res.candidate;
    CHECK(is_measuring_family({Zp}, S).result);
}

TEST_CASE("construction succeeds unattended on every bundled scenario") {
    for (const char* file : {"line.json", "plane.json", "cone.json"}) {
        CAPTURE(file);
        Scenario S = load_scenario(data_path(file));
        ConstructOptions opt;
        opt.seed = 42;
        ConstructResult res = construct_measuring(S, opt);
        CAPTURE(res.failure_reason);
        REQUIRE(res.success);
        Verdict v = is_measuring(res.candidate, S);
        std::string first_note = v.witnesses.empty() ? "" : v.witnesses[0].note;
        CAPTURE(first_note);
        CHECK(v.result);
        const MeasuringCandidate* Zp = &res.candidate;
        CHECK(is_measuring_family({Zp}, S).result);
    }
}

TEST_CASE("construction is deterministic for a fixed seed") {
    Scenario S = load_scenario(data_path("cone.json"));
    ConstructOptions opt;
    opt.seed = 7;
    ConstructResult a = construct_measuring(S, opt);
    ConstructResult b = construct_measuring(S, opt);
    REQUIRE(a.success);
    REQUIRE(b.success);
    CHECK(candidate_text(a.candidate) == candidate_text(b.candidate));
}

TEST_CASE("construction refuses perversities outside its hypotheses") {
    Scenario S = load_scenario(data_path("line.json"));
    S.perversity = Perversity(std::map<int, int>{{0, 0}, {1, -2}});  // not comonotone
    S.flags = compute_perversity_flags(S.perversity, {0, 1});
    ConstructResult res = construct_measuring(S, ConstructOptions{});
    CHECK_FALSE(res.success);
    CHECK(res.failed_step == 0);
    bool mentions = res.failure_reason.find("monotone") != std::string::npos ||
                    res.failure_reason.find("range") != std::string::npos;
    CHECK(mentions);
}

TEST_CASE("construction reports exhaustion when no cut can work") {
    Scenario S = load_scenario(data_path("line.json"));
    ConstructOptions opt;
    // poison the search: a tiny attempt budget and a pool whose entries fail
    // (1 vanishes nowhere, x - 1 misses the origin stratum it must contain)
    opt.pool = {parse_polynomial("1", S.ring), parse_polynomial("x - 1", S.ring)};
    opt.max_attempts = 0;
    ConstructResult res = construct_measuring(S, opt);
    CHECK_FALSE(res.success);
    CHECK(res.failed_step == 1);
    CHECK_FALSE(res.failure_reason.empty());
}
