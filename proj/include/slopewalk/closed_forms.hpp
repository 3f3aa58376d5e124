#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "slopewalk/errors.hpp"
#include "slopewalk/exactmath.hpp"
#include "slopewalk/lattice_enum.hpp"

namespace slopewalk {

// ---------------------------------------------------------------------------
// Rational Catalan numbers, Bizley and Grossman

/// (1/(a+b)) C(a+b, a) as an exact rational.
inline BigRational rational_catalan_value(std::int64_t a, std::int64_t b)
{
    detail::require(a >= 0 && b >= 0 && a + b > 0, "rational_catalan needs a, b >= 0, a + b > 0");
    return BigRational(binomial(a + b, a)) / BigRational(a + b);
}

/// Cat(a, b); IntegralityError when the value is not an integer.
inline BigInt rational_catalan(std::int64_t a, std::int64_t b)
{
    return to_integer(rational_catalan_value(a, b), "rational Catalan number");
}

/// c_j = (1/((a+b) j)) C((a+b) j, a j).
inline BigRational bizley_c(std::int64_t a, std::int64_t b, std::int64_t j)
{
    detail::require(j >= 1, "bizley_c needs j >= 1");
    return rational_catalan_value(a * j, b * j);
}

/**
 * f(ak, bk) for k = 0..n, the number of lattice paths from (0,0) to
 * (bk, ak) weakly below the line of slope a/b, as [t^k] exp(sum_j c_j t^j).
 */
inline std::vector<BigInt> bizley_series(std::int64_t a, std::int64_t b, std::size_t n)
{
    detail::require(n >= 1, "bizley_series needs n >= 1");
    std::vector<BigRational> c(n + 1);
    for (std::size_t j = 1; j <= n; ++j) c[j] = bizley_c(a, b, static_cast<std::int64_t>(j));
    const TruncatedSeries g = TruncatedSeries(std::move(c)).exp();
    std::vector<BigInt> out;
    out.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) out.push_back(to_integer(g[k], "Bizley coefficient"));
    return out;
}

/// Sum over partitions (e_1, ..., e_n) of n of prod_j c_j^e_j / e_j!.
inline BigInt grossman_sum(std::int64_t a, std::int64_t b, std::size_t n)
{
    detail::require(n >= 1, "grossman_sum needs n >= 1");
    std::vector<BigRational> c(n + 1);
    for (std::size_t j = 1; j <= n; ++j) c[j] = bizley_c(a, b, static_cast<std::int64_t>(j));
    BigRational total = 0;
    for (const PartitionMultiplicity& part : partitions(n)) {
        BigRational term = 1;
        for (std::size_t j = 0; j < part.multiplicities.size(); ++j) {
            const unsigned e = part.multiplicities[j];
            if (e == 0) continue;
            BigRational power = 1;
            for (unsigned k = 0; k < e; ++k) power *= c[j + 1];
            term *= power / BigRational(factorial(e));
        }
        total += term;
    }
    return to_integer(total, "Grossman partition sum");
}

// ---------------------------------------------------------------------------
// Slope 2/5

/// A_n + B_n = (2/(7n-1)) C(7n-1, 2n).
inline BigInt knuth_sum(std::int64_t n)
{
    detail::require(n >= 1, "knuth_sum needs n >= 1");
    return to_integer(BigRational(2 * binomial(7 * n - 1, 2 * n)) / BigRational(7 * n - 1), "knuth_sum");
}

/// Exact value of C_{n+1} / C_n predicted by the hypergeometric recurrence.
inline BigRational knuth_recurrence_ratio(std::int64_t n)
{
    detail::require(n >= 1, "recurrence needs n >= 1");
    BigRational num = 7, den = 10;
    for (std::int64_t k : {5, 4, 3, 2, 1, -1}) num *= BigRational(7 * n + k);
    for (std::int64_t k : {4, 3, 2, 1}) den *= BigRational(5 * n + k);
    den *= BigRational(2 * n + 1) * BigRational(n + 1);
    return num / den;
}

inline bool recurrence_check(std::int64_t n)
{
    detail::require(n >= 1, "recurrence_check needs n >= 1");
    return BigRational(knuth_sum(n + 1)) == knuth_recurrence_ratio(n) * BigRational(knuth_sum(n));
}

// ---------------------------------------------------------------------------
// Lattice points on y = (a x + b)/c

struct StartingPointFamily {
    std::int64_t a = 0, b = 0, c = 0;
    std::int64_t r_a = 0, r_c = 0;  // r_a a + r_c c = b
    std::int64_t s0 = 0;

    // (q1, q2) = (c s - r_a, a s + r_c).
    Point point(std::int64_t s) const { return {c * s - r_a, a * s + r_c}; }
    std::int64_t path_length(std::int64_t s) const { return (a + c) * s + r_c - r_a; }
};

/**
 * Lattice points (x, y) with c y = a x + b. The Bezout pair comes from the
 * unit solution a x + c y = g with 0 < y <= a/g, scaled by b/g.
 */
inline StartingPointFamily starting_points(std::int64_t a, std::int64_t b, std::int64_t c)
{
    detail::require(a > 0 && b > 0 && c > 0, "starting_points needs positive a, b, c");
    const std::int64_t g = std::gcd(a, c);
    if (b % g != 0)
        throw NoSolution("no lattice points on y = (" + std::to_string(a) + "x + " + std::to_string(b) + ")/" +
                         std::to_string(c) + ": gcd(a, c) does not divide b");
    std::int64_t x = 0, y = 0;
    for (y = 1; y <= a / g; ++y) {
        if ((g - c * y) % a == 0) {
            x = (g - c * y) / a;
            break;
        }
    }
    StartingPointFamily f;
    f.a = a;
    f.b = b;
    f.c = c;
    f.r_a = x * (b / g);
    f.r_c = y * (b / g);
    f.s0 = std::max(ceil_div(f.r_a, c), ceil_div(-f.r_c, a));
    return f;
}

/// Integral over t of |W_t| for walks from the s-th boundary point, in closed form.
inline BigRational naka_integral(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t s)
{
    const StartingPointFamily f = starting_points(a, b, c);
    detail::require(s >= f.s0, "naka_integral needs s >= S0");
    const std::int64_t len = f.path_length(s);
    detail::require(len > 0, "naka_integral: the boundary point is the origin");
    return make_rational(b, c) / BigRational(len) * BigRational(binomial(len, a * s + f.r_c));
}

/// The same integral as (1/c) sum_k |W_{k/c}| counted by the path DP.
inline BigRational naka_integral_dp(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t s)
{
    const StartingPointFamily f = starting_points(a, b, c);
    detail::require(s >= f.s0, "naka_integral_dp needs s >= S0");
    return distance_profile(RationalSlope(a, b, c), f.point(s)).integral();
}

// ---------------------------------------------------------------------------
// General rational slope

/// A_s(k) = NE paths strictly below y = (a x + k)/c ending at `end`.
inline BigInt count_A(std::int64_t a, std::int64_t k, std::int64_t c, Point end)
{
    return count_ne_below(RationalSlope(a, k, c, Boundary::Strict), end);
}

/// sum_{k = l a + 1}^{(l+1) a} A_s(k) for the endpoint (c s - 1, a s - 1), in closed form.
inline BigInt general_sum(std::int64_t a, std::int64_t c, std::int64_t l, std::int64_t s)
{
    detail::require(a >= 1 && a < c, "general_sum needs 1 <= a < c");
    detail::require(std::gcd(a, c) == 1, "general_sum needs gcd(a, c) = 1");
    detail::require(l >= 0 && (l + 1) * a < c, "general_sum needs (l + 1) a < c");
    detail::require(s >= 1, "general_sum needs s >= 1");
    const std::int64_t n = (a + c) * s + l - 1;
    return to_integer(BigRational(l * a + c) / BigRational(n) * BigRational(binomial(n, a * s - 1)), "general_sum");
}

inline BigInt general_sum_dp(std::int64_t a, std::int64_t c, std::int64_t l, std::int64_t s)
{
    BigInt total = 0;
    for (std::int64_t k = l * a + 1; k <= (l + 1) * a; ++k) total += count_A(a, k, c, {c * s - 1, a * s - 1});
    return total;
}

/// sum_{k=1}^{b} A_s(k) for the endpoint (c s - r_a, a s + r_c - 1), in closed form.
inline BigInt general_slope_sum(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t s)
{
    const StartingPointFamily f = starting_points(a, b, c);
    detail::require(s >= f.s0, "general_slope_sum needs s >= S0");
    const std::int64_t len = f.path_length(s);
    detail::require(len > 0, "general_slope_sum: the boundary point is the origin");
    return to_integer(BigRational(b) / BigRational(len) * BigRational(binomial(len, a * s + f.r_c)),
                      "general_slope_sum");
}

inline BigInt general_slope_sum_dp(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t s)
{
    const StartingPointFamily f = starting_points(a, b, c);
    detail::require(s >= f.s0, "general_slope_sum_dp needs s >= S0");
    const Point q = f.point(s);
    if (q.y < 1) return 0;
    BigInt total = 0;
    for (std::int64_t k = 1; k <= b; ++k) total += count_A(a, k, c, {q.x, q.y - 1});
    return total;
}

// ---------------------------------------------------------------------------
// Tree series

/// T(z)^r = sum_k C(t k + r, k) r/(t k + r) z^k, T the generalized tree series.
inline TruncatedSeries tree_series(const BigRational& t, const BigRational& r, std::size_t order)
{
    std::vector<BigRational> c(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        const BigRational top = t * BigRational(static_cast<unsigned long>(k)) + r;
        if (top == 0) throw PreconditionError("tree_series: t k + r vanishes at k = " + std::to_string(k));
        c[k] = gen_binomial(top, k) * r / top;
    }
    return TruncatedSeries(std::move(c));
}

/// log T(z) against sum_{n>=1} C(t n, n)/(t n) z^n.
inline bool log_tree_identity_check(const BigRational& t, std::size_t order)
{
    detail::require(t != 0, "log_tree_identity_check needs t != 0");
    const TruncatedSeries lhs = tree_series(t, 1, order).log();
    for (std::size_t n = 1; n <= order; ++n) {
        const BigRational tn = t * BigRational(static_cast<unsigned long>(n));
        if (lhs[n] != gen_binomial(tn, n) / tn) return false;
    }
    return true;
}

/// T(z) T(-z) for t = 3/2 has only even terms, [z^2n] = C(3n+1, n)/(n+1).
inline bool half_tree_identity_check(std::size_t order)
{
    const TruncatedSeries t = tree_series(make_rational(3, 2), 1, order);
    const TruncatedSeries prod = t * t.scale_argument(-1);
    for (std::size_t k = 0; k <= order; ++k) {
        const BigRational expected =
            (k % 2 == 1) ? BigRational(0)
                         : BigRational(binomial(static_cast<std::int64_t>(3 * k / 2 + 1), static_cast<std::int64_t>(k / 2))) /
                               BigRational(static_cast<unsigned long>(k / 2 + 1));
        if (prod[k] != expected) return false;
    }
    return true;
}

} // namespace slopewalk
