#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "slopewalk/errors.hpp"
#include "slopewalk/exactmath.hpp"

// Kernel method for P(u) = u^-a + u^c. The a small roots of 1 - z P(u) are
// u_i(z) = U(w^(i-1) z^(1/a)) with w = exp(2 pi i / a) and U(x) = x phi(U),
// phi(u) = (1 + u^(a+c))^(1/a).

namespace slopewalk {

struct BranchSeries {
    TruncatedSeries U;  // in x = z^(1/a)
    std::int64_t a = 0;
    std::int64_t c = 0;

    std::int64_t period() const { return a + c; }
};

namespace detail {

inline void require_kernel_model(std::int64_t a, std::int64_t c)
{
    require(a >= 1 && c >= 1, "kernel model needs a, c >= 1");
    require(std::gcd(a, c) == 1, "kernel model needs gcd(a, c) = 1");
}

} // namespace detail

/// [x^m] U(x)^h by Lagrange inversion: (h/m) [u^(m-h)] (1 + u^p)^(m/a).
inline BigRational lagrange_coefficient(std::int64_t a, std::int64_t c, std::int64_t h, std::int64_t m)
{
    detail::require_kernel_model(a, c);
    detail::require(h >= 1, "lagrange_coefficient needs h >= 1");
    if (m < h) return 0;
    const std::int64_t p = a + c;
    if ((m - h) % p != 0) return 0;
    return make_rational(h, m) * gen_binomial(make_rational(m, a), static_cast<std::uint64_t>((m - h) / p));
}

/// U(x)^h to order N in x, coefficient-wise from lagrange_coefficient.
inline TruncatedSeries lagrange_power_series(std::int64_t a, std::int64_t c, std::int64_t h, std::size_t order)
{
    std::vector<BigRational> coeffs(order + 1);
    for (std::size_t m = 1; m <= order; ++m) coeffs[m] = lagrange_coefficient(a, c, h, static_cast<std::int64_t>(m));
    return TruncatedSeries(std::move(coeffs));
}

/**
 * U(x) to order N by fixed-point iteration u <- x (1 + u^p)^(1/a), each
 * round fixing p more coefficients. The result is cross-checked against the
 * Lagrange coefficients and a mismatch throws ConsistencyError.
 */
inline BranchSeries branch_series(std::int64_t a, std::int64_t c, std::size_t order)
{
    detail::require_kernel_model(a, c);
    detail::require(order >= 1, "branch_series needs order >= 1");
    const std::size_t p = static_cast<std::size_t>(a + c);
    const TruncatedSeries x = TruncatedSeries::monomial(1, 1, order);
    const BigRational inv_a = make_rational(1, a);

    TruncatedSeries u = x;
    for (std::size_t correct = 1; correct < order; correct += p) {
        TruncatedSeries phi = binomial_series(u.pow(static_cast<unsigned long>(p)), inv_a);
        u = x * phi;
    }

    const TruncatedSeries check = lagrange_power_series(a, c, 1, order);
    if (!(u == check)) throw ConsistencyError("fixed-point and Lagrange branch series disagree");
    return {std::move(u), a, c};
}

/// U^a - x^a (1 + U^p); the zero series when U solves the kernel equation.
inline TruncatedSeries kernel_residual(const BranchSeries& b)
{
    const std::size_t n = b.U.order();
    const TruncatedSeries ua = b.U.pow(static_cast<unsigned long>(b.a));
    const TruncatedSeries up = b.U.pow(static_cast<unsigned long>(b.period()));
    const TruncatedSeries xa = TruncatedSeries::monomial(1, static_cast<std::size_t>(b.a), n);
    return ua - xa * (TruncatedSeries::constant(1, n) + up);
}

/**
 * Power sum p_h(z) = sum_i u_i(z)^h to order N in z. Summing over the a-th
 * roots of unity keeps only exponents of x divisible by a:
 * [z^n] p_h = a [x^(an)] U^h = (h/n) C(n, (a n - h)/p).
 */
inline TruncatedSeries power_sum(std::int64_t h, std::int64_t a, std::int64_t c, std::size_t order)
{
    detail::require_kernel_model(a, c);
    detail::require(h >= 1, "power_sum needs h >= 1");
    std::vector<BigRational> coeffs(order + 1);
    for (std::size_t n = 1; n <= order; ++n)
        coeffs[n] = BigRational(a) * lagrange_coefficient(a, c, h, a * static_cast<std::int64_t>(n));
    return TruncatedSeries(std::move(coeffs));
}

/// Same power sum, read off U^h from a precomputed branch series.
inline TruncatedSeries power_sum(const BranchSeries& b, std::int64_t h)
{
    detail::require(h >= 1, "power_sum needs h >= 1");
    const TruncatedSeries uh = b.U.pow(static_cast<unsigned long>(h));
    const std::size_t n = uh.order() / static_cast<std::size_t>(b.a);
    std::vector<BigRational> coeffs(n + 1);
    for (std::size_t k = 0; k <= n; ++k) coeffs[k] = BigRational(b.a) * uh[k * static_cast<std::size_t>(b.a)];
    return TruncatedSeries(std::move(coeffs));
}

struct SmallBranchSymmetrics {
    std::vector<TruncatedSeries> power_sums;  // p_1..p_a
    std::vector<TruncatedSeries> elementary;  // e_1..e_a
};

inline SmallBranchSymmetrics small_branch_symmetrics(std::int64_t a, std::int64_t c, std::size_t order)
{
    SmallBranchSymmetrics s;
    for (std::int64_t h = 1; h <= a; ++h) s.power_sums.push_back(power_sum(h, a, c, order));
    s.elementary = newton_e_from_p(s.power_sums, static_cast<std::size_t>(a));
    return s;
}

/**
 * Generating function F_i(z) of meanders with jumps -a/+c from altitude h
 * to altitude i, as ((-1)^(a-i-1) / z) s_(h+1, 1^(a-i-1))(u_1, ..., u_a).
 */
inline TruncatedSeries meander_gf(std::int64_t a, std::int64_t c, std::int64_t h, std::int64_t i, std::size_t order)
{
    detail::require_kernel_model(a, c);
    detail::require(h >= a, "meander_gf needs start altitude h >= a");
    detail::require(i >= 0 && i < a, "meander_gf needs 0 <= i < a");
    const SmallBranchSymmetrics sym = small_branch_symmetrics(a, c, order + 1);

    std::vector<unsigned> lambda{static_cast<unsigned>(h + 1)};
    for (std::int64_t k = 0; k < a - i - 1; ++k) lambda.push_back(1);
    TruncatedSeries s = jacobi_trudi_schur(lambda, sym.elementary);
    if (s[0] != 0) throw ConsistencyError("Schur series has a nonzero constant term; 1/z does not cancel");
    s = s.shift_down(1);
    return ((a - i - 1) % 2 == 0) ? s : -s;
}

/// F_0 (start 3, end 0) and G_1 (start 4, end 1) for jumps -2/+5 as
/// -e_2 h_3 / z and h_5 / z.
inline std::pair<TruncatedSeries, TruncatedSeries> slope25_F0_G1(std::size_t order)
{
    detail::require(order >= 5, "slope25_F0_G1 needs order >= 5");
    const SmallBranchSymmetrics sym = small_branch_symmetrics(2, 5, order + 1);
    const std::vector<TruncatedSeries> h = complete_from_elementary(sym.elementary, 5);
    TruncatedSeries f0 = -(sym.elementary[1] * h[3]).shift_down(1);
    TruncatedSeries g1 = h[5].shift_down(1);
    return {std::move(f0), std::move(g1)};
}

} // namespace slopewalk
