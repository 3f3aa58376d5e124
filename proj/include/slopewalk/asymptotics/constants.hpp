#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "slopewalk/asymptotics/real.hpp"
#include "slopewalk/asymptotics/roots.hpp"
#include "slopewalk/errors.hpp"
#include "slopewalk/exactmath/binomial.hpp"

namespace slopewalk {

struct StructuralConstants {
    std::int64_t a = 0, c = 0;
    Real tau;  // positive root of P'
    Real rho;  // 1 / P(tau)
    std::int64_t period() const { return a + c; }
    Complex omega() const { return root_of_unity(1, period()); }
    Complex singularity(long k) const { return Complex(rho) * root_of_unity(k, period()); }
};

/// P^(k)(u) for P(u) = u^-a + u^c.
inline Real jump_poly_derivative(std::int64_t a, std::int64_t c, const Real& u, int k)
{
    Real fa = 1, fc = 1;
    for (int i = 0; i < k; ++i) {
        fa *= Real(-a - i);
        fc *= Real(c - i);
    }
    return fa * pow(u, static_cast<long>(-a - k)) + fc * pow(u, static_cast<long>(c - k));
}

inline StructuralConstants structural_constants(std::int64_t a, std::int64_t c, const Precision& prec)
{
    detail::require(a >= 1 && c >= 1 && std::gcd(a, c) == 1, "structural constants need gcd(a, c) = 1");
    WorkingPrecision wp(prec);
    StructuralConstants s;
    s.a = a;
    s.c = c;
    s.tau = pow(Real(a) / Real(c), Real(1) / Real(a + c));
    s.rho = 1 / jump_poly_derivative(a, c, s.tau, 0);
    return s;
}

struct StructuralResiduals {
    Real derivative;  // |P'(tau)|
    Real reciprocal;  // |1 - rho P(tau)|
};

inline StructuralResiduals structural_residuals(const StructuralConstants& s, const Precision& prec)
{
    WorkingPrecision wp(prec);
    return {abs(jump_poly_derivative(s.a, s.c, s.tau, 1)),
            abs(1 - s.rho * jump_poly_derivative(s.a, s.c, s.tau, 0))};
}

inline KernelRoots kernel_roots_at(std::int64_t a, std::int64_t c, const Complex& z, const Precision& prec)
{
    WorkingPrecision wp(prec);
    return kernel_roots_at(a, c, z, prec.tolerance() * pow(Real(10), -static_cast<int>(prec.guard)));
}

inline std::vector<Complex> small_branches_at(std::int64_t a, std::int64_t c, const Complex& z, const Precision& prec)
{
    WorkingPrecision wp(prec);
    const StructuralConstants s = structural_constants(a, c, prec);
    detail::require(abs(z) <= s.rho * (1 + prec.tolerance()), "small branches are evaluated for |z| <= rho");
    return small_branches_at(a, c, z, s.rho, prec.tolerance() * pow(Real(10), -static_cast<int>(prec.guard)));
}

// ---------------------------------------------------------------------------
// Rotation law

/// kappa in [0, p) with kappa a + 1 = 0 (mod p).
inline std::int64_t rotation_exponent(std::int64_t a, std::int64_t c)
{
    const std::int64_t p = a + c;
    for (std::int64_t k = 0; k < p; ++k)
        if ((k * a + 1) % p == 0) return k;
    throw PreconditionError("rotation exponent needs gcd(a, a + c) = 1");
}

struct RotationSample {
    Complex z;
    std::vector<std::size_t> sigma;  // sigma[i]: index j with w^kappa u_i(wz) = u_j(z)
    Real deviation;
};

struct RotationReport {
    std::int64_t kappa = 0;
    std::vector<RotationSample> samples;
    Real max_deviation;
    bool passed = false;
    bool consistent_sigma = true;  // same permutation at every sample
};

/// Deterministic sample points (rho r_k) e^{i theta_k} inside the admissible sector.
inline std::vector<Complex> rotation_samples(const StructuralConstants& s, std::size_t count)
{
    std::vector<Complex> out;
    const Real sector = real_pi() - 2 * real_pi() / Real(s.period());
    for (std::size_t k = 0; k < count; ++k) {
        const Real frac = Real(static_cast<long>(k) + 1) / Real(static_cast<long>(count) + 1);
        const Real radius = s.rho * (Real(3) / 10 + Real(6) / 10 * frac);
        const Real theta = sector * (Real(1) / 10 + Real(8) / 10 * (1 - frac));
        out.push_back(Complex::polar(radius, theta));
    }
    return out;
}

/**
 * Checks w^kappa u_i(w z) = u_sigma(i)(z) as a multiset identity at each
 * sample: every rotated branch is matched to its nearest branch at z and
 * the largest mismatch is compared to `tolerance`.
 */
inline RotationReport rotation_law_check(std::int64_t a, std::int64_t c, const std::vector<Complex>& samples,
                                         const Real& tolerance, const Precision& prec)
{
    WorkingPrecision wp(prec);
    const StructuralConstants s = structural_constants(a, c, prec);
    RotationReport rep;
    rep.kappa = rotation_exponent(a, c);
    rep.max_deviation = 0;
    const Complex w = s.omega();
    const Complex wk = pow(w, static_cast<long>(rep.kappa));
    for (const Complex& z : samples) {
        const std::vector<Complex> at_z = small_branches_at(a, c, z, prec);
        const std::vector<Complex> at_wz = small_branches_at(a, c, w * z, prec);
        RotationSample sample{z, {}, Real(0)};
        std::vector<bool> used(at_z.size(), false);
        for (const Complex& u : at_wz) {
            const Complex v = wk * u;
            std::size_t best = 0;
            Real best_d = -1;
            for (std::size_t j = 0; j < at_z.size(); ++j) {
                const Real d = abs(v - at_z[j]);
                if (!used[j] && (best_d < 0 || d < best_d)) {
                    best = j;
                    best_d = d;
                }
            }
            used[best] = true;
            sample.sigma.push_back(best);
            sample.deviation = std::max(sample.deviation, best_d);
        }
        rep.max_deviation = std::max(rep.max_deviation, sample.deviation);
        if (!rep.samples.empty() && rep.samples.front().sigma != sample.sigma) rep.consistent_sigma = false;
        rep.samples.push_back(std::move(sample));
    }
    rep.passed = rep.max_deviation < tolerance && rep.consistent_sigma;
    return rep;
}

// ---------------------------------------------------------------------------
// Singular expansions

struct PuiseuxTerm {
    BigRational exponent;
    Real coeff;
};

/// [z^n] (1 - z/rho)^r = (-1)^n C(r, n) rho^-n.
inline Real singular_coefficient(const BigRational& r, const Real& rho, std::uint64_t n)
{
    Real v = to_real(gen_binomial(r, n)) / pow(rho, static_cast<long>(n));
    return (n % 2 == 1) ? Real(-v) : v;
}

/// sum_j c_j [z^n] (1 - z/rho)^(r_j); the periodic factor p is up to the caller.
inline Real local_extractor(const std::vector<PuiseuxTerm>& terms, const Real& rho, std::uint64_t n)
{
    Real total = 0;
    for (const auto& t : terms) total += t.coeff * singular_coefficient(t.exponent, rho, n);
    return total;
}

/**
 * Square-root expansion of the singular small branch at z = rho,
 * u(rho (1 - e)) = tau + C sqrt(e) + D e + C' e^(3/2) + ..., from matching
 * powers of e in 1/z = P(u).
 */
struct SquareRootExpansion {
    Real C;
    Real D;
    Real C_prime;
};

inline SquareRootExpansion singular_branch_expansion(const StructuralConstants& s, const Precision& prec)
{
    WorkingPrecision wp(prec);
    const Real P = jump_poly_derivative(s.a, s.c, s.tau, 0);
    const Real P2 = jump_poly_derivative(s.a, s.c, s.tau, 2);
    const Real P3 = jump_poly_derivative(s.a, s.c, s.tau, 3);
    const Real P4 = jump_poly_derivative(s.a, s.c, s.tau, 4);
    SquareRootExpansion e;
    e.C = -sqrt(2 * P / P2);
    const Real C2 = e.C * e.C;
    e.D = -P3 * C2 / (6 * P2);
    e.C_prime = (P - P2 * e.D * e.D / 2 - P3 * C2 * e.D / 2 - P4 * C2 * C2 / 24) / (P2 * e.C);
    return e;
}

/// d/de of a regular small branch u(rho (1 - e)) at e = 0.
inline Real regular_branch_slope(const StructuralConstants& s, const Real& u)
{
    const std::int64_t a = s.a, p = s.period();
    return -s.rho * (1 + pow(u, static_cast<long>(p))) /
           (Real(a) * pow(u, static_cast<long>(a - 1)) - s.rho * Real(p) * pow(u, static_cast<long>(p - 1)));
}

// ---------------------------------------------------------------------------
// Slope 2/5

struct AsymptoticProfile {
    Real tau, rho, tau2, mu;
    Real alpha1, alpha2, beta1, beta2;
    Real kappa1, kappa2;
    Real tau2_residual;     // degree-35 annihilator at tau2
    Real kappa1_residual;   // 23x^5 - 41x^4 + 10x^3 - 6x^2 - x - 1
    Real kappa2_residual;   // degree-5 polynomial at (7/3) kappa2
    Real kappa2_relation;   // |kappa2 - (3/9800)(13 - 236k - 194k^2 - 388k^3 + 437k^4)|
    unsigned digits = 0;
};

template <class T>
T eval_int_poly(std::initializer_list<long> coeffs_high_first, const T& x)
{
    T acc = 0;
    for (long c : coeffs_high_first) acc = acc * x + T(c);
    return acc;
}

inline Real tau2_annihilator(const Real& t)
{
    const Real t7 = pow(t, 7L);
    return eval_int_poly<Real>({500, 3900, 13540, 27708, 37500, 3125}, t7);
}

inline Real kappa1_minpoly(const Real& x) { return eval_int_poly<Real>({23, -41, 10, -6, -1, -1}, x); }

inline Real kappa2_minpoly(const Real& x)
{
    return eval_int_poly<Real>({11571875, -5363750, 628250, -97580, 5180, -142}, x);
}

/// tau2 = u_2(rho): the negative real small root at z = rho, Newton-polished.
inline Real slope25_tau2(const Precision& prec)
{
    WorkingPrecision wp(prec);
    const StructuralConstants s = structural_constants(2, 5, prec);
    const KernelRoots r = kernel_roots_at(2, 5, Complex(s.rho), prec);
    Real t = 1;
    for (const auto& u : r.small)
        if (u.re < 0 && abs(u.im) < prec.tolerance()) t = u.re;
    if (t > 0) throw RootFinderError("no negative real small root at z = rho");
    for (int i = 0; i < 8; ++i) {
        const Real f = s.rho * pow(t, 7L) - t * t + s.rho;
        const Real df = 7 * s.rho * pow(t, 6L) - 2 * t;
        t -= f / df;
    }
    return t;
}

inline AsymptoticProfile knuth_constants(const Precision& prec)
{
    detail::require(prec.digits >= 30, "Knuth constants need at least 30 digits");
    WorkingPrecision wp(prec);
    const StructuralConstants s = structural_constants(2, 5, prec);
    AsymptoticProfile k;
    k.digits = prec.digits;
    k.tau = s.tau;
    k.rho = s.rho;
    k.tau2 = slope25_tau2(prec);
    k.mu = k.tau2 / k.tau;
    const Real m = k.mu, m2 = m * m, m3 = m2 * m, m4 = m3 * m;
    const Real sqrt5 = sqrt(Real(5));
    const Real t7 = pow(k.tau2, 7L);
    k.alpha1 = (m4 + 2 * m3 + 3 * m2 + 4 * m + 5) / sqrt5;
    k.beta1 = sqrt5 - k.alpha1;
    k.alpha2 = -Real(1) / 10 *
               (5 * t7 * (13 * m4 + 22 * m3 + 29 * m2 + 36 * m + 45) + 2 * (15 * m4 + 20 * m3 + 13 * m2 - 8 * m - 45)) /
               (sqrt5 * (5 * t7 - 2));
    k.beta2 = -Real(9) / 10 * sqrt5 - k.alpha2;
    k.kappa1 = k.alpha1 / k.beta1;
    k.kappa2 = -Real(3) / 14 * (k.alpha2 * k.beta1 - k.alpha1 * k.beta2) / (k.beta1 * k.beta1);

    k.tau2_residual = abs(tau2_annihilator(k.tau2));
    k.kappa1_residual = abs(kappa1_minpoly(k.kappa1));
    k.kappa2_residual = abs(kappa2_minpoly(Real(7) / 3 * k.kappa2));
    const Real x = k.kappa1;
    k.kappa2_relation = abs(k.kappa2 - Real(3) / 9800 * eval_int_poly<Real>({437, -388, -194, -236, 13}, x));
    return k;
}

/// |poly((7/3) kappa2)| at the given precision.
inline Real kappa2_minpoly_residual(const Precision& prec) { return knuth_constants(prec).kappa2_residual; }

struct ABEstimate {
    Real A;    // two-term estimate of A_n
    Real B;    // two-term estimate of B_n
    Real sum;  // first-order estimate of A_n + B_n
};

inline ABEstimate an_bn_asymptotic(std::int64_t n, const AsymptoticProfile& k)
{
    detail::require(n >= 1, "an_bn_asymptotic needs n >= 1");
    const Real pi = real_pi();
    const Real growth = pow(k.rho, static_cast<long>(-7 * n));
    const Real m = Real(7 * n - 2);
    const Real first = growth / sqrt(pi * m * m * m);
    const Real second = growth / sqrt(pi * m * m * m * m * m);
    ABEstimate e;
    e.A = k.alpha1 * first + Real(3) / 2 * k.alpha2 * second;
    e.B = k.beta1 * first + Real(3) / 2 * k.beta2 * second;
    const Real nn = Real(n);
    e.sum = sqrt(Real(5) / (Real(343) * pi)) * growth / sqrt(nn * nn * nn);
    return e;
}

inline ABEstimate an_bn_asymptotic(std::int64_t n, const Precision& prec)
{
    WorkingPrecision wp(prec);
    return an_bn_asymptotic(n, knuth_constants(prec));
}

} // namespace slopewalk
