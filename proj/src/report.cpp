#include "pervcoh/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace pervcoh {

using nlohmann::json;

void Report::add(CheckRecord rec) {
    if (!rec.pass) overall = false;
    records.push_back(std::move(rec));
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

namespace {

json witness_to_json(const Witness& w) {
    json o = json::object();
    o["stratum"] = w.stratum;
    o["degree"] = w.degree;
    o["computed"] = w.computed ? json(*w.computed) : json(nullptr);
    o["required"] = w.required ? json(*w.required) : json(nullptr);
    o["note"] = w.note;
    return o;
}

}  // namespace

std::string render_report_json(const Report& R, bool include_timing) {
    json root = json::object();
    root["command"] = R.command;
    root["digest"] = R.digest;
    root["overall"] = R.overall;
    json recs = json::array();
    for (const auto& r : R.records) {
        json o = json::object();
        o["name"] = r.name;
        o["pass"] = r.pass;
        o["detail"] = r.detail;
        json ws = json::array();
        for (const auto& w : r.witnesses) ws.push_back(witness_to_json(w));
        o["witnesses"] = std::move(ws);
        if (include_timing) o["seconds"] = r.seconds;
        recs.push_back(std::move(o));
    }
    root["records"] = std::move(recs);
    return root.dump(2) + "\n";
}

std::string render_report_summary(const Report& R) {
    std::ostringstream out;
    for (const auto& r : R.records) {
        out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.detail.empty()) out << " -- " << r.detail;
        if (!r.pass && !r.witnesses.empty()) out << " -- " << r.witnesses.front().note;
        out << "\n";
    }
    out << (R.overall ? "[PASS]" : "[FAIL]") << " overall (" << R.command << ")\n";
    return out.str();
}

}  // namespace pervcoh
