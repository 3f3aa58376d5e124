#pragma once

#include <cstddef>
#include <vector>

#include "slopewalk/errors.hpp"

namespace slopewalk {

template <class Ring>
using Matrix = std::vector<std::vector<Ring>>;

/**
 * Division-free determinant over a commutative ring (Bird's algorithm,
 * O(n^4) ring multiplications).
 *
 * With mu(X) the upper-triangular matrix keeping X above the diagonal and
 * putting -(X_{i+1,i+1} + ... + X_{n,n}) on it, iterate X <- mu(X) A from
 * X = A; after n-1 steps det A = (-1)^(n-1) X_{1,1}. Needed because the
 * Jacobi-Trudi entries are power series whose constant terms vanish, so
 * elimination has no unit pivots.
 *
 * `zero` supplies the additive identity with whatever shape Ring needs
 * (e.g. a series of the right truncation order).
 */
template <class Ring>
Ring determinant(const Matrix<Ring>& a, const Ring& zero, const Ring& one)
{
    const std::size_t n = a.size();
    if (n == 0) return one;
    for (const auto& row : a)
        if (row.size() != n) throw PreconditionError("determinant of a non-square matrix");

    Matrix<Ring> x = a;
    for (std::size_t step = 1; step < n; ++step) {
        // mu(x): diagonal entries are negated trailing diagonal sums.
        std::vector<Ring> diag(n, zero);
        Ring tail = zero;
        for (std::size_t i = n; i-- > 0;) {
            diag[i] = -tail;
            tail = tail + x[i][i];
        }
        Matrix<Ring> next(n, std::vector<Ring>(n, zero));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Ring acc = diag[i] * a[i][j];
                for (std::size_t k = i + 1; k < n; ++k) acc = acc + x[i][k] * a[k][j];
                next[i][j] = acc;
            }
        }
        x = std::move(next);
    }
    return (n % 2 == 1) ? x[0][0] : -x[0][0];
}

} // namespace slopewalk
