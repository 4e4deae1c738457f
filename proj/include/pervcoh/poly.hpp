#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pervcoh/rational.hpp"
#include "pervcoh/ring.hpp"

namespace pervcoh {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Multivariate polynomial over QQ. Terms are kept sorted descending in the
// ring's default grevlex order with no zero coefficients, so equality is
// plain memberwise comparison.
class Polynomial {
  public:
    using Term = std::pair<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, std::vector<Term> terms);

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial variable(RingPtr ring, int var, int exponent = 1);
    static Polynomial term(RingPtr ring, Monomial m, const Rational& c);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    // Leading data in the canonical grevlex order; polynomial must be nonzero.
    const Monomial& lead_monomial() const;
    const Rational& lead_coefficient() const;

    int total_degree() const;  // -1 for the zero polynomial

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // f(x_i -> values_i): evaluation over QQ.
    Rational evaluate(const std::vector<Rational>& values) const;

    // Image of this polynomial in `target` under the variable-name map,
    // used when moving between a ring and its extensions.
    Polynomial transport(const RingPtr& target) const;

  private:
    RingPtr ring_;
    std::vector<Term> terms_;

    void check_ring(const Polynomial& o) const;
};

// Human-readable form, e.g. "x^2*y - 3/2*z + 1"; terms in canonical order.
std::string to_string(const Polynomial& p);

// Accepts integer or a/b rationals, variable names declared by the ring,
// '^' powers, '*' products (also implicit by juxtaposition of factors is
// NOT allowed: products must be explicit), '+'/'-', and parentheses.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

// Element of a free module S^rank, stored componentwise.
class FreeElement {
  public:
    FreeElement() = default;
    FreeElement(RingPtr ring, int rank);
    FreeElement(RingPtr ring, std::vector<Polynomial> comps);

    const RingPtr& ring() const { return ring_; }
    int rank() const { return static_cast<int>(comps_.size()); }
    const Polynomial& operator[](int i) const { return comps_.at(i); }
    Polynomial& operator[](int i) { return comps_.at(i); }
    const std::vector<Polynomial>& comps() const { return comps_; }

    bool is_zero() const;
    bool operator==(const FreeElement& o) const { return comps_ == o.comps_; }
    bool operator!=(const FreeElement& o) const { return !(*this == o); }

    FreeElement operator+(const FreeElement& o) const;
    FreeElement operator-(const FreeElement& o) const;
    FreeElement scaled(const Polynomial& f) const;

  private:
    RingPtr ring_;
    std::vector<Polynomial> comps_;
};

std::string to_string(const FreeElement& v);

}  // namespace pervcoh
