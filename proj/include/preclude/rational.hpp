// Exact rational arithmetic. All optimization code in this library works over
// Rational; no floating point is used anywhere in a value-bearing computation.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace preclude {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::int64_t rat_num(const Rational& r) { return mpz_get_si(r.get_num_mpz_t()); }
inline std::int64_t rat_den(const Rational& r) { return mpz_get_si(r.get_den_mpz_t()); }

// Floor of a rational, as a Rational.
inline Rational rat_floor(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return Rational(q);
}

// Ceiling of a rational, as a Rational.
inline Rational rat_ceil(const Rational& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return Rational(q);
}

inline bool rat_is_integer(const Rational& r) {
    return mpz_cmp_ui(r.get_den_mpz_t(), 1) == 0;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

using RationalVector = std::vector<Rational>;

} // namespace preclude
