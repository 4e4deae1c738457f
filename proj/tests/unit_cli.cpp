#include "doctest.h"

#include <iostream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "pervcoh/cli.hpp"
#include "pervcoh/measuring.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    args.insert(args.begin(), "pervcoh");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());

    std::ostringstream out, err;
    std::streambuf* old_out = std::cout.rdbuf(out.rdbuf());
    std::streambuf* old_err = std::cerr.rdbuf(err.rdbuf());
    RunResult r;
    try {
        r.code = pervcoh::run_cli(static_cast<int>(argv.size()), argv.data());
    } catch (...) {
        std::cout.rdbuf(old_out);
        std::cerr.rdbuf(old_err);
        throw;
    }
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string data_path(const std::string& name) {
    return std::string(PERVCOH_DATA_DIR) + "/" + name;
}

nlohmann::json parse_report(const RunResult& r) {
    CAPTURE(r.out);
    nlohmann::json j = nlohmann::json::parse(r.out, nullptr, false);
    REQUIRE_FALSE(j.is_discarded());
    REQUIRE(j.contains("command"));
    REQUIRE(j.contains("digest"));
    REQUIRE(j.contains("overall"));
    REQUIRE(j.contains("records"));
    return j;
}

const nlohmann::json* find_record(const nlohmann::json& report, const std::string& name) {
    for (const auto& rec : report["records"])
        if (rec["name"] == name) return &rec;
    return nullptr;
}

}  // namespace

TEST_CASE("validate: bundled scenarios pass, broken ones do not") {
    for (const char* f : {"cone.json", "line.json", "plane.json"}) {
        CAPTURE(f);
        RunResult r = run({"validate", data_path(f)});
        CAPTURE(r.err);
        CHECK(r.code == 0);
        nlohmann::json j = parse_report(r);
        CHECK(j["command"] == "validate");
        CHECK(j["overall"] == true);
    }

    RunResult bad = run({"validate", data_path("failing/dim_mismatch.json")});
    CHECK(bad.code == 2);
    nlohmann::json j = parse_report(bad);
    CHECK(j["overall"] == false);
    const nlohmann::json* rec = find_record(j, "validate:stratum_dimension[origin]");
    REQUIRE(rec != nullptr);
    CHECK((*rec)["pass"] == false);
    CHECK(bad.err.find("[FAIL]") != std::string::npos);
}

TEST_CASE("validate: malformed input is a usage error, not a math failure") {
    CHECK(run({"validate", data_path("invalid/undeclared_variable.json")}).code == 1);
    CHECK(run({"validate", data_path("invalid/unknown_field.json")}).code == 1);
    CHECK(run({"validate", data_path("does_not_exist.json")}).code == 1);
}

TEST_CASE("check: verdicts and witnesses surface in the report") {
    RunResult ok = run({"check", data_path("cone.json"), "--complex", "structure_shift1"});
    CHECK(ok.code == 0);
    nlohmann::json jok = parse_report(ok);
    CHECK(jok["overall"] == true);
    REQUIRE(find_record(jok, "perverse[structure_shift1]") != nullptr);
    // the fixture family is tested alongside
    REQUIRE(find_record(jok, "concentration[structure_shift1]") != nullptr);

    RunResult fail = run({"check", data_path("cone.json"), "--complex", "structure"});
    CHECK(fail.code == 2);
    nlohmann::json jf = parse_report(fail);
    CHECK(jf["overall"] == false);
    const nlohmann::json* le = find_record(jf, "le0[structure]");
    REQUIRE(le != nullptr);
    CHECK((*le)["pass"] == false);
    REQUIRE_FALSE((*le)["witnesses"].empty());
    CHECK((*le)["witnesses"][0]["stratum"] == "open");
    CHECK((*le)["witnesses"][0]["degree"] == 0);
    const nlohmann::json* ge = find_record(jf, "ge0[structure]");
    REQUIRE(ge != nullptr);
    CHECK((*ge)["pass"] == true);
}

TEST_CASE("check: unknown names are usage errors") {
    CHECK(run({"check", data_path("cone.json"), "--complex", "nope"}).code == 1);
    CHECK(run({"check", data_path("cone.json"), "--complex", "structure", "--family", "nope"})
              .code == 1);
}

TEST_CASE("check: unstratifiable cohomology is reported, not thrown") {
    RunResult r = run({"check", data_path("failing/off_stratification.json"), "--complex",
                       "offstrat"});
    CHECK(r.code == 2);
    nlohmann::json j = parse_report(r);
    CHECK(j["overall"] == false);
    bool found = false;
    for (const auto& rec : j["records"])
        if (!rec["pass"] &&
            std::string(rec["detail"]).find("not constructible") != std::string::npos)
            found = true;
    CHECK(found);
}

TEST_CASE("crossvalidate: perversity agrees with concentration on all fixtures") {
    for (const char* f : {"cone.json", "line.json", "plane.json"}) {
        CAPTURE(f);
        RunResult r = run({"crossvalidate", data_path(f)});
        CAPTURE(r.err);
        CHECK(r.code == 0);
        nlohmann::json j = parse_report(r);
        CHECK(j["command"] == "crossvalidate");
        CHECK(j["overall"] == true);
        REQUIRE(find_record(j, "family_measuring") != nullptr);
    }
}

TEST_CASE("construct: pool-driven run emits the new candidate") {
    RunResult r = run({"construct", data_path("plane.json"), "--pool", "x + y", "--pool", "x*y"});
    CHECK(r.code == 0);
    nlohmann::json j = parse_report(r);
    CHECK(j["overall"] == true);
    const nlohmann::json* rec = find_record(j, "construct");
    REQUIRE(rec != nullptr);
    std::string detail = (*rec)["detail"];
    CHECK(detail.find("x + y") != std::string::npos);
    CHECK(detail.find("x*y") != std::string::npos);
    REQUIRE(find_record(j, "constructed_is_measuring") != nullptr);
    CHECK((*find_record(j, "constructed_is_measuring"))["pass"] == true);
}

TEST_CASE("construct: --out writes a loadable scenario containing the candidate") {
    std::string out_path = "/tmp/pervcoh_cli_construct_out.json";
    RunResult r = run({"construct", data_path("line.json"), "--seed", "3", "--out", out_path});
    CHECK(r.code == 0);
    pervcoh::Scenario S = pervcoh::load_scenario(out_path);
    const pervcoh::MeasuringCandidate* Z = S.find_measuring("constructed");
    REQUIRE(Z != nullptr);
    CHECK(pervcoh::is_measuring(*Z, S).result);
    std::remove(out_path.c_str());
}

TEST_CASE("construct: bad pool entries are usage errors") {
    CHECK(run({"construct", data_path("plane.json"), "--pool", "x + w"}).code == 1);
    CHECK(run({"construct", data_path("plane.json"), "--pool", "x +"}).code == 1);
}

TEST_CASE("oracle: detects the first nonvanishing local cohomology degree") {
    RunResult r = run({"oracle", data_path("line.json"), "--complex", "structure", "--ideal",
                       "origin", "--i", "1"});
    CHECK(r.code == 0);
    nlohmann::json j = parse_report(r);
    const nlohmann::json* rec = find_record(j, "oracle[structure,origin,i=1]");
    REQUIRE(rec != nullptr);
    std::string detail = (*rec)["detail"];
    CHECK(detail.find("Ext^1 nonvanishing detected at t=1") != std::string::npos);

    RunResult v = run({"oracle", data_path("line.json"), "--complex", "structure", "--ideal",
                       "origin", "--i", "0"});
    CHECK(v.code == 0);
    nlohmann::json jv = parse_report(v);
    const nlohmann::json* vrec = find_record(jv, "oracle[structure,origin,i=0]");
    REQUIRE(vrec != nullptr);
    std::string vdetail = (*vrec)["detail"];
    CHECK(vdetail.find("vanishes") != std::string::npos);

    CHECK(run({"oracle", data_path("line.json"), "--complex", "structure", "--ideal", "nope",
               "--i", "1"})
              .code == 1);
}

TEST_CASE("reports are byte-stable across runs") {
    RunResult a = run({"crossvalidate", data_path("cone.json")});
    RunResult b = run({"crossvalidate", data_path("cone.json")});
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);

    // --timing adds a volatile field, so it is opt-in
    nlohmann::json j = parse_report(a);
    for (const auto& rec : j["records"]) CHECK_FALSE(rec.contains("seconds"));
    RunResult t = run({"check", data_path("line.json"), "--timing", "--complex", "skyscraper"});
    nlohmann::json jt = parse_report(t);
    for (const auto& rec : jt["records"]) CHECK(rec.contains("seconds"));
}

TEST_CASE("usage errors exit 1") {
    CHECK(run({}).code == 1);                       // no subcommand
    CHECK(run({"frobnicate"}).code == 1);           // unknown subcommand
    CHECK(run({"check", data_path("cone.json")}).code == 1);  // missing --complex
    CHECK(run({"--help"}).code == 0);               // help is not an error
}
