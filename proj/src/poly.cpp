#include "pervcoh/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pervcoh {

namespace {

// All Polynomial storage is normalized against this one order; the GB layer
// re-sorts into whatever order it is asked to use.
int canonical_compare(const Monomial& a, const Monomial& b) {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.size(); i-- > 0;) {
        int d = a[i] - b[i];
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

void normalize(std::vector<Polynomial::Term>& terms) {
    std::sort(terms.begin(), terms.end(), [](const auto& s, const auto& t) {
        return canonical_compare(s.first, t.first) > 0;
    });
    std::vector<Polynomial::Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
        if (!out.empty() && is_zero(out.back().second)) out.pop_back();
    }
    terms = std::move(out);
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    for (const auto& [m, c] : terms_)
        if (static_cast<int>(m.size()) != ring_->nvars())
            throw std::invalid_argument("monomial length does not match ring");
    normalize(terms_);
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
    Polynomial p(ring);
    if (!pervcoh::is_zero(c)) p.terms_.emplace_back(mono_one(ring->nvars()), c);
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, int var, int exponent) {
    if (var < 0 || var >= ring->nvars()) throw std::invalid_argument("variable index out of range");
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    Monomial m = mono_one(ring->nvars());
    m[var] = exponent;
    return term(std::move(ring), std::move(m), make_rational(1));
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Rational& c) {
    Polynomial p(std::move(ring));
    if (static_cast<int>(m.size()) != p.ring_->nvars())
        throw std::invalid_argument("monomial length does not match ring");
    if (!pervcoh::is_zero(c)) p.terms_.emplace_back(std::move(m), c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && mono_is_one(terms_[0].first));
}

const Monomial& Polynomial::lead_monomial() const {
    if (terms_.empty()) throw std::logic_error("lead_monomial of zero polynomial");
    return terms_.front().first;
}

const Rational& Polynomial::lead_coefficient() const {
    if (terms_.empty()) throw std::logic_error("lead_coefficient of zero polynomial");
    return terms_.front().second;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
    return d;
}

void Polynomial::check_ring(const Polynomial& o) const {
    if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_))
        throw std::invalid_argument("polynomial ring mismatch");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_ring(o);
    // Merge of two already-sorted term lists.
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        int cmp;
        if (i == terms_.size())
            cmp = -1;
        else if (j == o.terms_.size())
            cmp = 1;
        else
            cmp = canonical_compare(terms_[i].first, o.terms_[j].first);
        if (cmp > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (cmp < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Rational c = terms_[i].second + o.terms_[j].second;
            if (!pervcoh::is_zero(c)) r.terms_.emplace_back(terms_[i].first, c);
            ++i, ++j;
        }
    }
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_ring(o);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Rational c = ca * cb;
            prod.emplace_back(mono_mul(ma, mb), std::move(c));
        }
    normalize(prod);
    Polynomial r(ring_);
    r.terms_ = std::move(prod);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (pervcoh::is_zero(c)) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& [m, coeff] : r.terms_) coeff = Rational(coeff * c);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].first != o.terms_[i].first || terms_[i].second != o.terms_[i].second)
            return false;
    return true;
}

Rational Polynomial::evaluate(const std::vector<Rational>& values) const {
    if (static_cast<int>(values.size()) != ring_->nvars())
        throw std::invalid_argument("evaluate: wrong number of values");
    Rational acc = make_rational(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t v = 0; v < m.size(); ++v)
            for (int e = 0; e < m[v]; ++e) t = Rational(t * values[v]);
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::transport(const RingPtr& target) const {
    std::vector<int> map(ring_->nvars());
    for (int v = 0; v < ring_->nvars(); ++v) {
        auto idx = target->var_index(ring_->var_name(v));
        if (!idx) throw std::invalid_argument("transport: target ring lacks " + ring_->var_name(v));
        map[v] = *idx;
    }
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        Monomial t = mono_one(target->nvars());
        for (int v = 0; v < ring_->nvars(); ++v) t[map[v]] = m[v];
        terms.emplace_back(std::move(t), c);
    }
    return Polynomial(target, std::move(terms));
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = abs(c);
        if (first)
            out << (sgn(c) < 0 ? "-" : "");
        else
            out << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        bool unit = (a == 1);
        if (!unit || mono_is_one(m)) out << a.get_str();
        bool printed = !unit || mono_is_one(m);
        for (int v = 0; v < p.ring()->nvars(); ++v) {
            if (m[v] == 0) continue;
            if (printed) out << "*";
            out << p.ring()->var_name(v);
            if (m[v] > 1) out << "^" << m[v];
            printed = true;
        }
    }
    return out.str();
}

namespace {

class Parser {
  public:
    Parser(const std::string& text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    const std::string& text_;
    RingPtr ring_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + why + " in \"" +
                         text_ + "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial expr() {
        bool neg = false;
        skip_ws();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (eat('^')) {
            std::string digits = read_digits();
            if (digits.empty()) fail("exponent expected after '^'");
            long e = std::stol(digits);
            Polynomial pow = Polynomial::constant(ring_, make_rational(1));
            for (long i = 0; i < e; ++i) pow = pow * base;
            return pow;
        }
        return base;
    }

    Polynomial atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!eat(')')) fail("missing ')'");
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_digits();
            std::string den = "1";
            if (eat('/')) {
                den = read_digits();
                if (den.empty()) fail("denominator expected after '/'");
            }
            return Polynomial::constant(ring_, make_rational(num, den));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = read_ident();
            auto idx = ring_->var_index(name);
            if (!idx) fail("undeclared variable '" + name + "'");
            return Polynomial::variable(ring_, *idx);
        }
        fail("term expected");
    }

    std::string read_digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    std::string read_ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    return Parser(text, ring).run();
}

FreeElement::FreeElement(RingPtr ring, int rank) : ring_(std::move(ring)) {
    if (rank < 0) throw std::invalid_argument("negative rank");
    comps_.assign(static_cast<std::size_t>(rank), Polynomial(ring_));
}

FreeElement::FreeElement(RingPtr ring, std::vector<Polynomial> comps)
    : ring_(std::move(ring)), comps_(std::move(comps)) {
    for (const auto& p : comps_)
        if (!p.ring() || !p.ring()->same_as(*ring_))
            throw std::invalid_argument("free element component over wrong ring");
}

bool FreeElement::is_zero() const {
    for (const auto& p : comps_)
        if (!p.is_zero()) return false;
    return true;
}

FreeElement FreeElement::operator+(const FreeElement& o) const {
    if (rank() != o.rank()) throw std::invalid_argument("free element rank mismatch");
    FreeElement r(ring_, rank());
    for (int i = 0; i < rank(); ++i) r.comps_[i] = comps_[i] + o.comps_[i];
    return r;
}

FreeElement FreeElement::operator-(const FreeElement& o) const {
    if (rank() != o.rank()) throw std::invalid_argument("free element rank mismatch");
    FreeElement r(ring_, rank());
    for (int i = 0; i < rank(); ++i) r.comps_[i] = comps_[i] - o.comps_[i];
    return r;
}

FreeElement FreeElement::scaled(const Polynomial& f) const {
    FreeElement r(ring_, rank());
    for (int i = 0; i < rank(); ++i) r.comps_[i] = comps_[i] * f;
    return r;
}

std::string to_string(const FreeElement& v) {
    std::string s = "(";
    for (int i = 0; i < v.rank(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

}  // namespace pervcoh
