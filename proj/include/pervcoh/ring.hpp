#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pervcoh {

// Polynomial ring QQ[x_1, ..., x_n], identified by its ordered variable list.
// Shared immutably between every object built over it.
class Ring {
  public:
    explicit Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {
        if (vars_.empty())
            throw std::invalid_argument("ring needs at least one variable");
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (vars_[i].empty())
                throw std::invalid_argument("empty variable name");
            for (std::size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i] == vars_[j])
                    throw std::invalid_argument("duplicate variable name: " + vars_[i]);
        }
    }

    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var_name(int i) const { return vars_.at(i); }

    std::optional<int> var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        return std::nullopt;
    }

    bool same_as(const Ring& other) const { return vars_ == other.vars_; }

  private:
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars) {
    return std::make_shared<const Ring>(std::move(vars));
}

// Exponent vector, length == ring->nvars().
using Monomial = std::vector<int>;

inline Monomial mono_one(int nvars) { return Monomial(static_cast<std::size_t>(nvars), 0); }

inline bool mono_is_one(const Monomial& m) {
    for (int e : m)
        if (e != 0) return false;
    return true;
}

inline int mono_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Requires mono_divides(b, a).
inline Monomial mono_quotient(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

// Term order on monomials: grevlex or lex, optionally composed with a
// variable priority permutation (priority[k] = index of the k-th most
// significant ring variable).
class MonomialOrder {
  public:
    enum class Kind : std::uint8_t { grevlex, lex };

    MonomialOrder(Kind kind, int nvars) : kind_(kind), priority_(nvars) {
        std::iota(priority_.begin(), priority_.end(), 0);
    }

    MonomialOrder(Kind kind, std::vector<int> priority)
        : kind_(kind), priority_(std::move(priority)) {
        std::vector<bool> seen(priority_.size(), false);
        for (int p : priority_) {
            if (p < 0 || p >= static_cast<int>(priority_.size()) || seen[p])
                throw std::invalid_argument("variable priority is not a permutation");
            seen[p] = true;
        }
    }

    static MonomialOrder grevlex(int nvars) { return {Kind::grevlex, nvars}; }
    static MonomialOrder lex(int nvars) { return {Kind::lex, nvars}; }

    Kind kind() const { return kind_; }
    int nvars() const { return static_cast<int>(priority_.size()); }
    const std::vector<int>& priority() const { return priority_; }

    // +1 if a > b, 0 if equal, -1 if a < b.
    int compare(const Monomial& a, const Monomial& b) const {
        if (kind_ == Kind::grevlex) {
            int da = mono_degree(a), db = mono_degree(b);
            if (da != db) return da > db ? 1 : -1;
            // Ties: the last (least significant) position where the
            // exponents differ decides, smaller exponent wins.
            for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
                int d = a[*it] - b[*it];
                if (d != 0) return d < 0 ? 1 : -1;
            }
            return 0;
        }
        for (int v : priority_) {
            int d = a[v] - b[v];
            if (d != 0) return d > 0 ? 1 : -1;
        }
        return 0;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  private:
    Kind kind_;
    std::vector<int> priority_;
};

}  // namespace pervcoh
