#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "slopewalk/asymptotics/real.hpp"
#include "slopewalk/errors.hpp"

namespace slopewalk {

/// Polynomial with complex coefficients, constant term first.
using ComplexPoly = std::vector<Complex>;

inline Complex horner(const ComplexPoly& p, const Complex& x)
{
    Complex acc;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

// p(x), p'(x) and sum_j |p_j| |x|^j (the rounding scale of p(x)).
struct HornerResult {
    Complex value;
    Complex derivative;
    Real scale;
};

inline HornerResult horner_with_derivative(const ComplexPoly& p, const Complex& x)
{
    HornerResult r{Complex(), Complex(), Real(0)};
    const Real ax = abs(x);
    for (std::size_t i = p.size(); i-- > 0;) {
        r.derivative = r.derivative * x + r.value;
        r.value = r.value * x + p[i];
        r.scale = r.scale * ax + abs(p[i]);
    }
    return r;
}

/**
 * All roots of p by Aberth-Ehrlich simultaneous iteration. A root counts as
 * converged when its correction drops below `tol` (relative) or its residual
 * is at rounding level; the latter is what terminates at multiple roots,
 * which are only determined to about half the working digits.
 */
inline std::vector<Complex> aberth_roots(const ComplexPoly& p, std::vector<Complex> x, const Real& tol,
                                         int max_iterations = 2000)
{
    const std::size_t n = p.size() - 1;
    detail::require(p.size() >= 2 && norm(p.back()) > 0, "aberth_roots needs a polynomial of degree >= 1");
    if (x.size() != n) {
        // Deterministic start on a circle, rotated off the real axis.
        x.clear();
        const Real radius = pow(abs(p[0]) / abs(p.back()), Real(1) / Real(n));
        const Real r = radius > 0 ? radius : Real(1);
        for (std::size_t k = 0; k < n; ++k)
            x.push_back(Complex::polar(r, (2 * real_pi() * Real(k) + Real(1) / 2) / Real(n)));
    }
    const Real eps = pow(Real(10), -static_cast<int>(Real::default_precision()) + 2);

    for (int it = 0; it < max_iterations; ++it) {
        bool done = true;
        std::vector<Complex> next = x;
        for (std::size_t k = 0; k < n; ++k) {
            const HornerResult h = horner_with_derivative(p, x[k]);
            if (abs(h.value) <= eps * h.scale) continue;
            const Complex ratio = h.value / h.derivative;
            Complex repulsion;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) repulsion += Complex(Real(1)) / (x[k] - x[j]);
            const Complex w = ratio / (Complex(Real(1)) - ratio * repulsion);
            next[k] = x[k] - w;
            if (abs(w) > tol * std::max(Real(1), abs(x[k]))) done = false;
        }
        x = std::move(next);
        if (done) return x;
    }
    throw RootFinderError("Aberth iteration did not converge in " + std::to_string(max_iterations) + " steps");
}

/// z u^(a+c) - u^a + z, whose roots are the roots of 1 - z (u^-a + u^c).
inline ComplexPoly kernel_polynomial(std::int64_t a, std::int64_t c, const Complex& z)
{
    ComplexPoly p(static_cast<std::size_t>(a + c + 1));
    p[0] = z;
    p[static_cast<std::size_t>(a)] = Complex(Real(-1));
    p[static_cast<std::size_t>(a + c)] = z;
    return p;
}

struct KernelRoots {
    std::vector<Complex> small;  // a roots of least modulus
    std::vector<Complex> large;
    std::vector<Complex> all;    // as returned by the root finder
};

namespace detail {

inline Real coincidence_tolerance()
{
    return pow(Real(10), -static_cast<int>(Real::default_precision()) / 3);
}

} // namespace detail

/**
 * Kernel roots at z, split into the a small and c large ones by modulus.
 * A modulus tie at the split is accepted only when the two roots coincide
 * (the double root on the singular ring); any other tie throws.
 */
inline KernelRoots kernel_roots_at(std::int64_t a, std::int64_t c, const Complex& z, const Real& tol,
                                   const std::vector<Complex>& warm_start = {})
{
    detail::require(a >= 1 && c >= 1, "kernel roots need a, c >= 1");
    detail::require(norm(z) > 0, "kernel roots need z != 0");
    KernelRoots r;
    r.all = aberth_roots(kernel_polynomial(a, c, z), warm_start, tol);
    std::vector<Complex> sorted = r.all;
    std::sort(sorted.begin(), sorted.end(), [](const Complex& x, const Complex& y) { return norm(x) < norm(y); });
    const std::size_t split = static_cast<std::size_t>(a);
    const Real gap = abs(sorted[split]) - abs(sorted[split - 1]);
    const Real same = detail::coincidence_tolerance();
    if (gap <= same && abs(sorted[split] - sorted[split - 1]) > same)
        throw RootFinderError("ambiguous small/large classification: distinct roots of equal modulus");
    r.small.assign(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(split));
    r.large.assign(sorted.begin() + static_cast<std::ptrdiff_t>(split), sorted.end());
    return r;
}

namespace detail {

// Index of the root in `pool` closest to `target`, or -1 if the runner-up
// is not clearly farther away. Coincident candidates count as one.
inline long unambiguous_nearest(const Complex& target, const std::vector<Complex>& pool)
{
    long best = -1, second = -1;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        const Real d = abs(pool[i] - target);
        if (best < 0 || d < abs(pool[static_cast<std::size_t>(best)] - target)) {
            second = best;
            best = static_cast<long>(i);
        } else if (second < 0 || d < abs(pool[static_cast<std::size_t>(second)] - target)) {
            second = static_cast<long>(i);
        }
    }
    if (second < 0) return best;
    const Complex& b = pool[static_cast<std::size_t>(best)];
    const Complex& s = pool[static_cast<std::size_t>(second)];
    if (abs(b - s) <= coincidence_tolerance()) return best;
    if (abs(b - target) * 4 >= abs(s - target)) return -1;
    return best;
}

} // namespace detail

/**
 * Labeled small branches u_1(z), ..., u_a(z) with u_i ~ w^(i-1) z^(1/a) near
 * 0 (w = exp(2 pi i / a), principal root). Labels are fixed at z0 = rho/2 on
 * the positive axis and carried to z by continuation along the segment
 * [z0, z], halving the step whenever the matching is ambiguous.
 */
inline std::vector<Complex> small_branches_at(std::int64_t a, std::int64_t c, const Complex& z, const Real& rho,
                                              const Real& tol)
{
    const Complex z0(rho / 2);
    KernelRoots base = kernel_roots_at(a, c, z0, tol);

    std::vector<Complex> labeled(static_cast<std::size_t>(a));
    {
        const Complex x = principal_root(z0, a);
        std::vector<bool> used(base.small.size(), false);
        for (std::int64_t i = 0; i < a; ++i) {
            const Complex xi = root_of_unity(i, a) * x;
            // Two-term expansion u = x (1 + x^p / a + ...).
            const Complex guess = xi * (Complex(Real(1)) + pow(xi, a + c) / Complex(Real(a)));
            const long k = detail::unambiguous_nearest(guess, base.small);
            if (k < 0 || used[static_cast<std::size_t>(k)])
                throw RootFinderError("could not label the small branches at the base point");
            used[static_cast<std::size_t>(k)] = true;
            labeled[static_cast<std::size_t>(i)] = base.small[static_cast<std::size_t>(k)];
        }
    }

    std::vector<Complex> all = base.all;
    Real t = 0, step = Real(1) / 8;
    const Real min_step = pow(Real(2), -40);
    while (t < 1) {
        const Real t_next = std::min(Real(1), t + step);
        const Complex zt = z0 + (z - z0) * Complex(t_next);
        bool ok = true;
        KernelRoots next;
        try {
            next = kernel_roots_at(a, c, zt, tol, all);
        } catch (const RootFinderError&) {
            ok = false;
        }
        std::vector<Complex> moved(labeled.size());
        if (ok) {
            std::vector<bool> used(next.small.size(), false);
            for (std::size_t i = 0; i < labeled.size() && ok; ++i) {
                const long k = detail::unambiguous_nearest(labeled[i], next.all);
                if (k < 0) {
                    ok = false;
                    break;
                }
                // The match must be one of the small roots and not reused.
                const Complex& cand = next.all[static_cast<std::size_t>(k)];
                long s = -1;
                for (std::size_t j = 0; j < next.small.size(); ++j)
                    if (!used[j] && abs(next.small[j] - cand) <= detail::coincidence_tolerance()) s = static_cast<long>(j);
                if (s < 0) {
                    ok = false;
                    break;
                }
                used[static_cast<std::size_t>(s)] = true;
                moved[i] = next.small[static_cast<std::size_t>(s)];
            }
        }
        if (!ok) {
            step /= 2;
            if (step < min_step) throw RootFinderError("branch continuation stalled: step size underflow");
            continue;
        }
        labeled = std::move(moved);
        all = std::move(next.all);
        t = t_next;
        step = std::min(Real(1) / 4, step * 3 / 2);
    }
    return labeled;
}

} // namespace slopewalk
