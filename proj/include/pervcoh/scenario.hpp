#pragma once

#include <map>
#include <string>
#include <vector>

#include "pervcoh/complexes.hpp"
#include "pervcoh/groebner.hpp"
#include "pervcoh/presented.hpp"

namespace pervcoh {

struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Stratum {
    std::string name;
    Ideal ideal;       // ideal of the closure in the ambient ring
    int declared_dim = 0;
};

struct PerversityFlags {
    bool monotone = false;
    bool strictly_monotone = false;  // across distinct stratum dimensions
    bool comonotone = false;         // dual p_bar(n) = -n - p(n) decreasing
    bool strictly_comonotone = false;
    bool in_range = false;           // -n <= p(n) <= 0
};

struct MissingPerversityEntry : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Perversity {
  public:
    Perversity() = default;
    explicit Perversity(std::map<int, int> table) : table_(std::move(table)) {}

    const std::map<int, int>& table() const { return table_; }
    bool defined(int d) const { return table_.count(d) > 0; }
    int at(int d) const {
        auto it = table_.find(d);
        if (it == table_.end())
            throw MissingPerversityEntry("perversity undefined at dimension " + std::to_string(d));
        return it->second;
    }

  private:
    std::map<int, int> table_;
};

// Flags are computed against the table's domain; the strict variants only
// compare the listed stratum dimensions, per their definition.
PerversityFlags compute_perversity_flags(const Perversity& p,
                                         const std::vector<int>& stratum_dims);

struct CuttingFunction {
    Polynomial function;
    int step = 0;  // induction step d+1 at which the cut was introduced
};

struct MeasuringCandidate {
    std::string name;
    Ideal ideal;
    std::vector<CuttingFunction> cutting;
};

struct Scenario {
    RingPtr ring;
    Ideal variety_ideal;
    std::vector<Stratum> strata;                // declaration order
    Perversity perversity;
    PerversityFlags flags;
    DualizingData dualizing;                    // shift = number of variables
    std::vector<std::pair<std::string, FreeComplex>> complexes;  // name-sorted
    std::vector<MeasuringCandidate> measuring;                   // name-sorted

    int dim_x = 0;  // dimension(variety_ideal), computed at load

    const FreeComplex* find_complex(const std::string& name) const;
    const MeasuringCandidate* find_measuring(const std::string& name) const;
    const Stratum* find_stratum(const std::string& name) const;
};

// Strict loader: unknown keys, malformed polynomials, non-rectangular
// matrices, bad types all throw ScenarioError with a JSON-path-bearing
// message. Load succeeding does not mean the scenario is mathematically
// consistent; that is validate_scenario's job.
Scenario load_scenario(const std::string& path);
Scenario parse_scenario_text(const std::string& text, const std::string& origin);

// Canonical serialization: object keys sorted, arrays in declaration order,
// polynomials printed canonically. Byte-stable under reload.
std::string serialize_scenario(const Scenario& S);
void save_scenario(const Scenario& S, const std::string& path);

struct ValidationIssue {
    std::string check;    // which invariant
    bool pass = false;
    std::string detail;   // witness text (offending generator, dims, ...)
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationIssue> issues;  // one entry per executed check
};

ValidationReport validate_scenario(const Scenario& S);

struct SupportDecomposition {
    bool stratified = false;
    std::vector<std::string> strata;  // names, declaration order
};

// supp(M) equals the union of some stratum closures? Greedy: collect every
// stratum closure inside V(ann M), then test the union covers.
SupportDecomposition stratified_support_check(const PresentedModule& M, const Scenario& S);

}  // namespace pervcoh
