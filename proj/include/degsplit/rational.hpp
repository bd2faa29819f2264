#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace degsplit {

/// Arbitrary-precision integer and exact rational types.  All probability
/// values with closed binomial forms are carried as `rational`; only the
/// exponential bounds live in floating point.
using big_int = mpz_class;
using rational = mpq_class;

/// C(n, k) as an exact integer; 0 when k > n.
inline big_int binomial_coefficient(unsigned long n, unsigned long k) {
    big_int r;
    if (k > n) return r;  // 0
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// 2^k as an exact integer.
inline big_int pow2(unsigned long k) {
    big_int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

inline rational make_rational(const big_int& num, const big_int& den) {
    if (sgn(den) == 0) throw std::invalid_argument("rational: zero denominator");
    rational q(num, den);
    q.canonicalize();
    return q;
}

inline rational make_rational(long num, long den) {
    return make_rational(big_int(num), big_int(den));
}

/// Parses "3", "-3", "81/8" and decimal forms like "0.2" into an exact
/// rational.  Decimal digits are taken literally (no binary rounding).
inline rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
        rational q;
        if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
            throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
        if (sgn(big_int(q.get_den())) == 0)
            throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
        q.canonicalize();
        return q;
    }
    const std::string int_part = text.substr(0, dot);
    const std::string frac_part = text.substr(dot + 1);
    if (frac_part.empty() || frac_part.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
    bool negative = false;
    std::string digits = int_part;
    if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
        negative = digits[0] == '-';
        digits = digits.substr(1);
    }
    if (digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
    if (digits.empty()) digits = "0";
    big_int num(digits + frac_part, 10);
    big_int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    if (negative) num = -num;
    return make_rational(num, den);
}

/// Canonical "num/den" (or plain "num" when den == 1).
inline std::string rational_to_string(const rational& q) {
    return q.get_str();
}

inline double rational_to_double(const rational& q) {
    return q.get_d();
}

/// ceil(q), exact.
inline big_int ceil_rational(const rational& q) {
    big_int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

/// floor(q), exact.
inline big_int floor_rational(const rational& q) {
    big_int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline long to_long_checked(const big_int& z, const char* what) {
    if (!z.fits_slong_p()) throw std::overflow_error(std::string(what) + ": value does not fit in long");
    return z.get_si();
}

}  // namespace degsplit
