#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "slopewalk/errors.hpp"
#include "slopewalk/exactmath/determinant.hpp"
#include "slopewalk/exactmath/partitions.hpp"
#include "slopewalk/exactmath/series.hpp"

// Symmetric functions of a variables whose values are power series.

namespace slopewalk {

namespace detail {

inline std::size_t common_order(std::span<const TruncatedSeries> xs)
{
    if (xs.empty()) throw PreconditionError("empty list of series");
    std::size_t n = xs[0].order();
    for (const auto& x : xs) n = std::min(n, x.order());
    return n;
}

} // namespace detail

/**
 * Power sums p_1..p_a to elementary symmetric functions e_1..e_a via
 * Newton's identities  k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i.
 */
inline std::vector<TruncatedSeries> newton_e_from_p(std::span<const TruncatedSeries> p, std::size_t a)
{
    detail::require(p.size() == a, "newton_e_from_p: need exactly a power sums");
    if (a == 0) return {};
    const std::size_t n = detail::common_order(p);
    std::vector<TruncatedSeries> e;
    e.reserve(a + 1);
    e.push_back(TruncatedSeries::constant(1, n));
    for (std::size_t k = 1; k <= a; ++k) {
        TruncatedSeries acc(n);
        for (std::size_t i = 1; i <= k; ++i) {
            TruncatedSeries term = e[k - i] * p[i - 1];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        e.push_back(make_rational(1, static_cast<std::int64_t>(k)) * acc);
    }
    return {e.begin() + 1, e.end()};
}

/// Complete homogeneous h_0..h_kmax from e_1..e_a: h_k = sum_i (-1)^(i-1) e_i h_{k-i}.
inline std::vector<TruncatedSeries> complete_from_elementary(std::span<const TruncatedSeries> e, std::size_t kmax)
{
    const std::size_t n = detail::common_order(e);
    std::vector<TruncatedSeries> h{TruncatedSeries::constant(1, n)};
    for (std::size_t k = 1; k <= kmax; ++k) {
        TruncatedSeries acc(n);
        for (std::size_t i = 1; i <= std::min(k, e.size()); ++i) {
            TruncatedSeries term = e[i - 1] * h[k - i];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        h.push_back(std::move(acc));
    }
    return h;
}

/**
 * Schur polynomial s_lambda of the a variables whose elementary symmetric
 * functions are e_1..e_a, through the dual Jacobi-Trudi determinant
 * s_lambda = det(e_{lambda'_i - i + j}) over the conjugate partition.
 *
 * lambda is given in row form (largest part first, trailing zeros allowed)
 * and may have at most a nonzero parts.
 */
inline TruncatedSeries jacobi_trudi_schur(std::span<const unsigned> lambda, std::span<const TruncatedSeries> e)
{
    const std::size_t a = e.size();
    const std::size_t n = detail::common_order(e);
    std::vector<unsigned> rows;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (i > 0 && lambda[i] > lambda[i - 1]) throw PreconditionError("partition parts must be non-increasing");
        if (lambda[i] > 0) rows.push_back(lambda[i]);
    }
    detail::require(rows.size() <= a, "jacobi_trudi_schur: partition has more parts than variables");

    const std::vector<unsigned> conj = conjugate_partition(rows);
    const std::size_t m = conj.size();
    const TruncatedSeries zero(n), one = TruncatedSeries::constant(1, n);
    auto elem = [&](long k) -> TruncatedSeries {
        if (k == 0) return one;
        if (k < 0 || static_cast<std::size_t>(k) > a) return zero;
        return e[static_cast<std::size_t>(k) - 1].truncate(n);
    };
    Matrix<TruncatedSeries> mat(m, std::vector<TruncatedSeries>(m, zero));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            mat[i][j] = elem(static_cast<long>(conj[i]) - static_cast<long>(i) + static_cast<long>(j));
    return determinant(mat, zero, one);
}

} // namespace slopewalk
