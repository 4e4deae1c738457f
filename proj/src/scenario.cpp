#include "pervcoh/scenario.hpp"

#include "pervcoh/homology.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace pervcoh {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& path,
                       const std::string& why) {
    throw ScenarioError(origin + ": " + (path.empty() ? "" : path + ": ") + why);
}

void expect_keys(const json& obj, const std::string& origin, const std::string& path,
                 const std::set<std::string>& required, const std::set<std::string>& optional) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!required.count(it.key()) && !optional.count(it.key()))
            fail(origin, path, "unknown field \"" + it.key() + "\"");
    for (const auto& k : required)
        if (!obj.contains(k)) fail(origin, path, "missing field \"" + k + "\"");
}

int parse_int_key(const std::string& key, const std::string& origin, const std::string& path) {
    try {
        std::size_t used = 0;
        int v = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
        return v;
    } catch (const std::exception&) {
        fail(origin, path, "key \"" + key + "\" is not an integer");
    }
}

std::vector<Polynomial> parse_ideal_gens(const json& arr, const RingPtr& ring,
                                         const std::string& origin, const std::string& path) {
    if (!arr.is_array()) fail(origin, path, "expected an array of polynomials");
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto& e = arr[i];
        std::string at = path + "[" + std::to_string(i) + "]";
        if (!e.is_string()) fail(origin, at, "expected a polynomial string");
        try {
            gens.push_back(parse_polynomial(e.get<std::string>(), ring));
        } catch (const ParseError& err) {
            fail(origin, at, err.what());
        }
    }
    return gens;
}

FreeComplex parse_complex(const json& obj, const RingPtr& ring, const std::string& origin,
                          const std::string& path) {
    if (!obj.is_object()) fail(origin, path, "expected an object");
    expect_keys(obj, origin, path, {"ranks"}, {"differentials"});

    FreeComplex C(ring);
    const json& ranks = obj.at("ranks");
    if (!ranks.is_object()) fail(origin, path + ".ranks", "expected an object");
    for (auto it = ranks.begin(); it != ranks.end(); ++it) {
        int k = parse_int_key(it.key(), origin, path + ".ranks");
        if (!it.value().is_number_integer() || it.value().get<int>() < 0)
            fail(origin, path + ".ranks." + it.key(), "rank must be a non-negative integer");
        C.ranks[k] = it.value().get<int>();
    }

    if (obj.contains("differentials")) {
        const json& diffs = obj.at("differentials");
        if (!diffs.is_object()) fail(origin, path + ".differentials", "expected an object");
        for (auto it = diffs.begin(); it != diffs.end(); ++it) {
            std::string at = path + ".differentials." + it.key();
            int k = parse_int_key(it.key(), origin, path + ".differentials");
            int rows = C.rank_at(k + 1), cols = C.rank_at(k);
            const json& m = it.value();
            if (!m.is_array() || static_cast<int>(m.size()) != rows)
                fail(origin, at,
                     "expected " + std::to_string(rows) + " rows for a map out of degree " +
                         std::to_string(k));
            Matrix d(ring, rows, cols);
            for (int r = 0; r < rows; ++r) {
                const json& row = m[static_cast<std::size_t>(r)];
                if (!row.is_array() || static_cast<int>(row.size()) != cols)
                    fail(origin, at + "[" + std::to_string(r) + "]",
                         "expected " + std::to_string(cols) + " entries");
                for (int c = 0; c < cols; ++c) {
                    const json& e = row[static_cast<std::size_t>(c)];
                    if (!e.is_string())
                        fail(origin,
                             at + "[" + std::to_string(r) + "][" + std::to_string(c) + "]",
                             "expected a polynomial string");
                    try {
                        d.at(r, c) = parse_polynomial(e.get<std::string>(), ring);
                    } catch (const ParseError& err) {
                        fail(origin,
                             at + "[" + std::to_string(r) + "][" + std::to_string(c) + "]",
                             err.what());
                    }
                }
            }
            C.diffs[k] = std::move(d);
        }
    }
    return C;
}

}  // namespace

PerversityFlags compute_perversity_flags(const Perversity& p,
                                         const std::vector<int>& stratum_dims) {
    PerversityFlags f;
    const auto& t = p.table();
    f.monotone = true;
    f.comonotone = true;
    f.in_range = true;
    for (auto it = t.begin(); it != t.end(); ++it) {
        if (it->second > 0 || it->second < -it->first) f.in_range = false;
        auto next = std::next(it);
        if (next == t.end()) break;
        if (it->second < next->second) f.monotone = false;
        if (-it->first - it->second < -next->first - next->second) f.comonotone = false;
    }

    std::set<int> dims(stratum_dims.begin(), stratum_dims.end());
    f.strictly_monotone = true;
    f.strictly_comonotone = true;
    for (auto it = dims.begin(); it != dims.end(); ++it) {
        auto next = std::next(it);
        if (next == dims.end()) break;
        if (!p.defined(*it) || !p.defined(*next)) {
            f.strictly_monotone = f.strictly_comonotone = false;
            break;
        }
        if (p.at(*it) <= p.at(*next)) f.strictly_monotone = false;
        if (-*it - p.at(*it) <= -*next - p.at(*next)) f.strictly_comonotone = false;
    }
    return f;
}

const FreeComplex* Scenario::find_complex(const std::string& name) const {
    for (const auto& [n, c] : complexes)
        if (n == name) return &c;
    return nullptr;
}

const MeasuringCandidate* Scenario::find_measuring(const std::string& name) const {
    for (const auto& m : measuring)
        if (m.name == name) return &m;
    return nullptr;
}

const Stratum* Scenario::find_stratum(const std::string& name) const {
    for (const auto& s : strata)
        if (s.name == name) return &s;
    return nullptr;
}

Scenario parse_scenario_text(const std::string& text, const std::string& origin) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw ScenarioError(origin + ": not valid JSON: " + e.what());
    }
    if (!root.is_object()) fail(origin, "", "top level must be an object");
    expect_keys(root, origin, "", {"variables", "variety_ideal", "strata", "perversity", "complexes"},
                {"measuring"});

    Scenario S;

    const json& vars = root.at("variables");
    if (!vars.is_array() || vars.empty()) fail(origin, "variables", "expected a non-empty array");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (!vars[i].is_string())
            fail(origin, "variables[" + std::to_string(i) + "]", "expected a string");
        names.push_back(vars[i].get<std::string>());
    }
    try {
        S.ring = make_ring(std::move(names));
    } catch (const std::invalid_argument& e) {
        fail(origin, "variables", e.what());
    }

    S.variety_ideal = Ideal(S.ring, parse_ideal_gens(root.at("variety_ideal"), S.ring, origin,
                                                     "variety_ideal"));

    const json& strata = root.at("strata");
    if (!strata.is_array()) fail(origin, "strata", "expected an array");
    for (std::size_t i = 0; i < strata.size(); ++i) {
        std::string at = "strata[" + std::to_string(i) + "]";
        const json& st = strata[i];
        if (!st.is_object()) fail(origin, at, "expected an object");
        expect_keys(st, origin, at, {"name", "ideal", "dim"}, {});
        if (!st.at("name").is_string() || st.at("name").get<std::string>().empty())
            fail(origin, at + ".name", "expected a non-empty string");
        if (!st.at("dim").is_number_integer() || st.at("dim").get<int>() < 0)
            fail(origin, at + ".dim", "expected a non-negative integer");
        Stratum s;
        s.name = st.at("name").get<std::string>();
        s.ideal = Ideal(S.ring, parse_ideal_gens(st.at("ideal"), S.ring, origin, at + ".ideal"));
        s.declared_dim = st.at("dim").get<int>();
        S.strata.push_back(std::move(s));
    }

    const json& perv = root.at("perversity");
    if (!perv.is_object()) fail(origin, "perversity", "expected an object");
    std::map<int, int> table;
    for (auto it = perv.begin(); it != perv.end(); ++it) {
        int d = parse_int_key(it.key(), origin, "perversity");
        if (!it.value().is_number_integer())
            fail(origin, "perversity." + it.key(), "expected an integer");
        table[d] = it.value().get<int>();
    }
    S.perversity = Perversity(std::move(table));

    const json& cxs = root.at("complexes");
    if (!cxs.is_object()) fail(origin, "complexes", "expected an object");
    for (auto it = cxs.begin(); it != cxs.end(); ++it)
        S.complexes.emplace_back(it.key(),
                                 parse_complex(it.value(), S.ring, origin,
                                               "complexes." + it.key()));

    if (root.contains("measuring")) {
        const json& ms = root.at("measuring");
        if (!ms.is_object()) fail(origin, "measuring", "expected an object");
        for (auto it = ms.begin(); it != ms.end(); ++it) {
            std::string at = "measuring." + it.key();
            const json& m = it.value();
            if (!m.is_object()) fail(origin, at, "expected an object");
            expect_keys(m, origin, at, {"ideal"}, {"cutting"});
            MeasuringCandidate cand;
            cand.name = it.key();
            cand.ideal = Ideal(S.ring, parse_ideal_gens(m.at("ideal"), S.ring, origin,
                                                        at + ".ideal"));
            if (m.contains("cutting")) {
                const json& cuts = m.at("cutting");
                if (!cuts.is_array()) fail(origin, at + ".cutting", "expected an array");
                for (std::size_t i = 0; i < cuts.size(); ++i) {
                    std::string cp = at + ".cutting[" + std::to_string(i) + "]";
                    const json& cut = cuts[i];
                    if (!cut.is_object()) fail(origin, cp, "expected an object");
                    expect_keys(cut, origin, cp, {"function", "step"}, {});
                    if (!cut.at("function").is_string())
                        fail(origin, cp + ".function", "expected a polynomial string");
                    if (!cut.at("step").is_number_integer())
                        fail(origin, cp + ".step", "expected an integer");
                    CuttingFunction cf;
                    try {
                        cf.function =
                            parse_polynomial(cut.at("function").get<std::string>(), S.ring);
                    } catch (const ParseError& err) {
                        fail(origin, cp + ".function", err.what());
                    }
                    cf.step = cut.at("step").get<int>();
                    cand.cutting.push_back(std::move(cf));
                }
            }
            S.measuring.push_back(std::move(cand));
        }
    }

    S.dualizing.shift = S.ring->nvars();
    auto d = dimension(S.variety_ideal);
    S.dim_x = d.value_or(-1);
    std::vector<int> dims;
    for (const auto& s : S.strata) dims.push_back(s.declared_dim);
    S.flags = compute_perversity_flags(S.perversity, dims);
    return S;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_text(buf.str(), path);
}

namespace {

json ideal_to_json(const Ideal& I) {
    json arr = json::array();
    for (const auto& g : I.gens()) arr.push_back(to_string(g));
    return arr;
}

json complex_to_json(const FreeComplex& C) {
    json obj = json::object();
    json ranks = json::object();
    for (const auto& [k, r] : C.ranks)
        if (r != 0) ranks[std::to_string(k)] = r;
    obj["ranks"] = std::move(ranks);
    json diffs = json::object();
    for (const auto& [k, d] : C.diffs) {
        if (d.rows() == 0 || d.cols() == 0 || d.is_zero()) continue;
        json rows = json::array();
        for (int r = 0; r < d.rows(); ++r) {
            json row = json::array();
            for (int c = 0; c < d.cols(); ++c) row.push_back(to_string(d.at(r, c)));
            rows.push_back(std::move(row));
        }
        diffs[std::to_string(k)] = std::move(rows);
    }
    obj["differentials"] = std::move(diffs);
    return obj;
}

}  // namespace

std::string serialize_scenario(const Scenario& S) {
    json root = json::object();
    json vars = json::array();
    for (const auto& v : S.ring->vars()) vars.push_back(v);
    root["variables"] = std::move(vars);
    root["variety_ideal"] = ideal_to_json(S.variety_ideal);

    json strata = json::array();
    for (const auto& s : S.strata) {
        json st = json::object();
        st["name"] = s.name;
        st["ideal"] = ideal_to_json(s.ideal);
        st["dim"] = s.declared_dim;
        strata.push_back(std::move(st));
    }
    root["strata"] = std::move(strata);

    json perv = json::object();
    for (const auto& [d, v] : S.perversity.table()) perv[std::to_string(d)] = v;
    root["perversity"] = std::move(perv);

    json cxs = json::object();
    for (const auto& [name, C] : S.complexes) cxs[name] = complex_to_json(C);
    root["complexes"] = std::move(cxs);

    if (!S.measuring.empty()) {
        json ms = json::object();
        for (const auto& m : S.measuring) {
            json cand = json::object();
            cand["ideal"] = ideal_to_json(m.ideal);
            json cuts = json::array();
            for (const auto& c : m.cutting) {
                json cut = json::object();
                cut["function"] = to_string(c.function);
                cut["step"] = c.step;
                cuts.push_back(std::move(cut));
            }
            cand["cutting"] = std::move(cuts);
            ms[m.name] = std::move(cand);
        }
        root["measuring"] = std::move(ms);
    }
    return root.dump(2) + "\n";
}

void save_scenario(const Scenario& S, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ScenarioError(path + ": cannot open for writing");
    out << serialize_scenario(S);
}

namespace {

void add(ValidationReport& rep, std::string check, bool pass, std::string detail) {
    rep.issues.push_back({std::move(check), pass, std::move(detail)});
    if (!pass) rep.ok = false;
}

std::string flag_text(const PerversityFlags& f) {
    auto b = [](bool v) { return v ? "true" : "false"; };
    std::ostringstream out;
    out << "monotone=" << b(f.monotone) << " strictly_monotone=" << b(f.strictly_monotone)
        << " comonotone=" << b(f.comonotone)
        << " strictly_comonotone=" << b(f.strictly_comonotone) << " in_range=" << b(f.in_range);
    return out.str();
}

}  // namespace

ValidationReport validate_scenario(const Scenario& S) {
    ValidationReport rep;
    MonomialOrder ord = MonomialOrder::grevlex(S.ring->nvars());

    auto dx = dimension(S.variety_ideal);
    add(rep, "variety_dimension", dx.has_value(),
        dx ? "dim X = " + std::to_string(*dx) : "variety ideal is the unit ideal (X empty)");

    add(rep, "strata_nonempty", !S.strata.empty(),
        S.strata.empty() ? "no strata declared" : std::to_string(S.strata.size()) + " strata");

    {
        std::set<std::string> seen;
        std::string dup;
        for (const auto& s : S.strata)
            if (!seen.insert(s.name).second) dup = s.name;
        add(rep, "distinct_stratum_names", dup.empty(),
            dup.empty() ? "all distinct" : "duplicate stratum name \"" + dup + "\"");
    }

    int max_dim = -1;
    for (const auto& s : S.strata) {
        max_dim = std::max(max_dim, s.declared_dim);
        auto d = dimension(s.ideal);
        bool dim_ok = d.has_value() && *d == s.declared_dim;
        add(rep, "stratum_dimension[" + s.name + "]", dim_ok,
            "declared " + std::to_string(s.declared_dim) + ", computed " +
                (d ? std::to_string(*d) : std::string("-infinity (empty)")));

        const auto& gb = default_groebner_basis(s.ideal);
        std::string offender;
        for (const auto& g : S.variety_ideal.gens())
            if (!normal_form(g, gb, ord).is_zero()) {
                offender = to_string(g);
                break;
            }
        add(rep, "stratum_contains_variety[" + s.name + "]", offender.empty(),
            offender.empty() ? "all variety generators reduce to 0"
                             : "generator " + offender + " does not lie in the stratum ideal");
    }

    if (dx) {
        add(rep, "max_stratum_dim", max_dim == *dx,
            "max declared " + std::to_string(max_dim) + ", dim X = " + std::to_string(*dx));

        // union of maximal stratum closures = X, up to radical
        std::vector<const Stratum*> maximal;
        for (const auto& s : S.strata)
            if (s.declared_dim == *dx) maximal.push_back(&s);
        if (!maximal.empty()) {
            Ideal inter = maximal[0]->ideal;
            for (std::size_t i = 1; i < maximal.size(); ++i)
                inter = ideal_intersection(inter, maximal[i]->ideal);
            std::string witness;
            for (const auto& g : inter.gens())
                if (!radical_membership(g, S.variety_ideal)) {
                    witness = to_string(g) + " not in rad(I_X)";
                    break;
                }
            if (witness.empty())
                for (const auto& g : S.variety_ideal.gens())
                    if (!radical_membership(g, inter)) {
                        witness = to_string(g) + " not in rad(intersection)";
                        break;
                    }
            add(rep, "strata_cover_variety", witness.empty(),
                witness.empty() ? "union of maximal closures = X" : witness);
        } else {
            add(rep, "strata_cover_variety", false, "no stratum of dimension dim X");
        }

        std::string missing;
        for (int d = 0; d <= *dx; ++d)
            if (!S.perversity.defined(d)) {
                missing = std::to_string(d);
                break;
            }
        std::string extra;
        for (const auto& [d, v] : S.perversity.table())
            if (d < 0 || d > *dx) {
                extra = std::to_string(d);
                break;
            }
        add(rep, "perversity_domain", missing.empty() && extra.empty(),
            !missing.empty() ? "undefined at dimension " + missing
            : !extra.empty() ? "defined at out-of-range dimension " + extra
                             : "covers 0.." + std::to_string(*dx));
    }

    add(rep, "perversity_flags", true, flag_text(S.flags));

    for (const auto& [name, C] : S.complexes) {
        std::string problem;
        try {
            validate_complex(C);
        } catch (const ComplexShapeError& e) {
            problem = e.what();
        }
        add(rep, "complex_valid[" + name + "]", problem.empty(),
            problem.empty() ? "shapes consistent, d o d = 0" : problem);
    }

    for (const auto& m : S.measuring) {
        bool len_ok = S.dim_x < 0 || static_cast<int>(m.cutting.size()) <= S.dim_x;
        std::string detail;
        if (!len_ok)
            detail = "cutting list longer than dim X";
        else {
            // V(I_Z) = V(I_X + cutting) up to radical
            std::vector<Polynomial> cut_gens = S.variety_ideal.gens();
            for (const auto& c : m.cutting) cut_gens.push_back(c.function);
            Ideal cut(S.ring, std::move(cut_gens));
            for (const auto& g : cut.gens())
                if (!radical_membership(g, m.ideal)) {
                    detail = to_string(g) + " not in rad(I_Z)";
                    break;
                }
            if (detail.empty())
                for (const auto& g : m.ideal.gens())
                    if (!radical_membership(g, cut)) {
                        detail = to_string(g) + " not in rad(I_X + cutting)";
                        break;
                    }
        }
        add(rep, "measuring_invariants[" + m.name + "]", detail.empty(),
            detail.empty() ? "V(I_Z) = V(I_X + cutting) up to radical; length ok" : detail);
    }

    add(rep, "stratum_primality_trusted", true,
        "stratum ideals are assumed prime (generic points); not verified here");
    return rep;
}

SupportDecomposition stratified_support_check(const PresentedModule& M, const Scenario& S) {
    SupportDecomposition out;
    Ideal ann = annihilator(M);

    // Every stratum closure contained in supp(M) = V(ann).
    std::vector<const Stratum*> inside;
    for (const auto& s : S.strata) {
        bool contained = true;
        for (const auto& g : ann.gens())
            if (!radical_membership(g, s.ideal)) {
                contained = false;
                break;
            }
        if (contained) inside.push_back(&s);
    }

    // Their union covers supp(M)?
    Ideal inter(S.ring, {Polynomial::constant(S.ring, make_rational(1))});
    if (!inside.empty()) {
        inter = inside[0]->ideal;
        for (std::size_t i = 1; i < inside.size(); ++i)
            inter = ideal_intersection(inter, inside[i]->ideal);
    }
    bool covered = true;
    for (const auto& g : inter.gens())
        if (!radical_membership(g, ann)) {
            covered = false;
            break;
        }

    out.stratified = covered;
    if (covered)
        for (const auto* s : inside) out.strata.push_back(s->name);
    return out;
}

}  // namespace pervcoh
