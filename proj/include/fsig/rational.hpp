#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "fsig/errors.hpp"

namespace fsig {

using Int = mpz_class;
using Rational = mpq_class;

using QVec = std::vector<Rational>;
using ZVec = std::vector<Int>;

// Parses "p", "p/q" or a plain decimal like "0.25" into an exact rational in
// lowest terms.  Anything a Rational prints re-parses to the same value.
Rational parse_rational(const std::string& s);

// Canonical "p/q" (integers print as "p").
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Rounded fixed-point decimal with the given number of fractional digits,
// e.g. 5/12 -> "0.416666666667" at 12 digits.
std::string to_decimal(const Rational& q, int digits = 12);

inline Int floor_q(const Rational& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int ceil_q(const Rational& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Int lcm_z(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int pow_z(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Rational pow_q(const Rational& base, unsigned long exp) {
    return Rational(pow_z(Int(base.get_num()), exp), pow_z(Int(base.get_den()), exp));
}

bool is_prime(const Int& n);

// Lexicographic comparison of rational vectors.
bool lex_less(const QVec& a, const QVec& b);

std::string format_point(const QVec& p);

} // namespace fsig
