#pragma once

#include <gmpxx.h>

#include <string>

namespace pervcoh {

// Exact rational coefficients. mpq arithmetic keeps results canonical as
// long as every value entering it is canonical, so all construction from
// raw numerator/denominator pairs must go through make_rational.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const std::string& num, const std::string& den) {
    Rational r{mpz_class(num), mpz_class(den)};
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace pervcoh
