#pragma once

#include <cstdint>

#include "slopewalk/exactmath/rational.hpp"

namespace slopewalk {

/// Generalized binomial x(x-1)...(x-k+1)/k! for a rational upper index.
inline BigRational gen_binomial(const BigRational& x, std::uint64_t k)
{
    BigRational result = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        result *= x - BigRational(static_cast<unsigned long>(i));
        result /= BigRational(static_cast<unsigned long>(i + 1));
    }
    return result;
}

/// Integer binomial C(n, k); zero for k < 0, GMP's convention for negative n.
inline BigInt binomial(const BigInt& n, std::int64_t k)
{
    if (k < 0) return 0;
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

inline BigInt binomial(std::int64_t n, std::int64_t k) { return binomial(BigInt(static_cast<long>(n)), k); }

inline BigInt factorial(std::uint64_t n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

} // namespace slopewalk
