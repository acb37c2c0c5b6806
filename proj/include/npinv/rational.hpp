#ifndef NPINV_RATIONAL_HPP
#define NPINV_RATIONAL_HPP

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace npinv {

// Exact rational scalar. mpq_class is kept canonical (lowest terms,
// positive denominator) by every constructor below.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Serialized form: "num" or "num/den", den > 0.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::optional<Rational> rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) return std::nullopt;
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Requires is_integer(q) and a value that fits in long.
inline long to_long(const Rational& q) {
    if (!is_integer(q)) throw std::invalid_argument("rational is not an integer");
    if (!q.get_num().fits_slong_p()) throw std::overflow_error("rational exceeds long range");
    return q.get_num().get_si();
}

inline Rational rational_pow(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return r;
}

inline double to_double(const Rational& q) { return q.get_d(); }

} // namespace npinv

#endif
