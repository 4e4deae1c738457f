#pragma once

#include <cstdint>

#include "pervcoh/perversity.hpp"

namespace pervcoh {

struct CheckRecord {
    std::string name;
    bool pass = true;
    std::string detail;
    std::vector<Witness> witnesses;
    double seconds = 0.0;  // wall time; never part of the canonical rendering
};

struct Report {
    std::string command;
    std::string digest;  // FNV-1a 64 of the canonical scenario serialization
    std::vector<CheckRecord> records;
    bool overall = true;

    void add(CheckRecord rec);
};

std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t v);

// Canonical JSON: object keys sorted, records in execution order, timings
// omitted unless include_timing. Byte-stable for fixed inputs.
std::string render_report_json(const Report& R, bool include_timing = false);

// One line per record, for stderr.
std::string render_report_summary(const Report& R);

}  // namespace pervcoh
