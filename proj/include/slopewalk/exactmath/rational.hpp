#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "slopewalk/errors.hpp"

namespace slopewalk {

using BigInt = mpz_class;

// GMP keeps mpq values canonical after every arithmetic operation, so a
// BigRational is always reduced with a positive denominator. Only values
// built from a raw numerator/denominator pair need an explicit canonicalize,
// which make_rational does.
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) throw PreconditionError("rational with zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

inline BigRational make_rational(std::int64_t num, std::int64_t den = 1)
{
    return make_rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

inline BigInt to_integer(const BigRational& q, const char* what = "value")
{
    if (!is_integer(q))
        throw IntegralityError(std::string(what) + " is not an integer: " + q.get_str());
    return q.get_num();
}

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const BigRational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline BigInt floor_div(const BigInt& n, const BigInt& d)
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline BigInt ceil_div(const BigInt& n, const BigInt& d)
{
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline std::int64_t floor_div(std::int64_t n, std::int64_t d)
{
    std::int64_t q = n / d;
    if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
    return q;
}

inline std::int64_t ceil_div(std::int64_t n, std::int64_t d) { return -floor_div(-n, d); }

inline BigInt ceil(const BigRational& q) { return ceil_div(q.get_num(), q.get_den()); }

} // namespace slopewalk
