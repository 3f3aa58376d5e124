#include <gtest/gtest.h>

#include "slopewalk/asymptotics.hpp"
#include "slopewalk/closed_forms.hpp"
#include "slopewalk/errors.hpp"
#include "slopewalk/kernel_series.hpp"
#include "slopewalk/lattice_enum.hpp"

using namespace slopewalk;

namespace {

const Precision kPrec{50, 15};

Real eval_series(const TruncatedSeries& f, const Real& z)
{
    Real acc = 0;
    for (std::size_t k = f.order() + 1; k-- > 0;) acc = acc * z + to_real(f[k]);
    return acc;
}

Real positive_real_small_root(std::int64_t a, std::int64_t c, const Real& z)
{
    const KernelRoots r = kernel_roots_at(a, c, Complex(z), kPrec);
    for (const auto& u : r.small)
        if (u.re > 0 && abs(u.im) < Real("1e-20")) return u.re;
    throw RootFinderError("no positive small root");
}

} // namespace

TEST(Structural, RadicalForms)
{
    WorkingPrecision wp(kPrec);
    const auto s = structural_constants(2, 5, kPrec);
    EXPECT_LT(abs(s.tau - pow(Real(2) / 5, Real(1) / 7)), Real("1e-48"));
    EXPECT_LT(abs(s.rho - pow(Real(12500), Real(1) / 7) / 7), Real("1e-48"));
    EXPECT_EQ(to_fixed(s.tau, 9), "0.877306662");
    EXPECT_EQ(to_fixed(s.rho, 6), "0.549762");

    const auto d = structural_constants(1, 1, kPrec);
    EXPECT_LT(abs(d.tau - 1), Real("1e-48"));
    EXPECT_LT(abs(d.rho - Real(1) / 2), Real("1e-48"));
}

TEST(Structural, Residuals)
{
    WorkingPrecision wp(kPrec);
    for (auto [a, c] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 3}, {2, 5}, {3, 5}}) {
        const auto s = structural_constants(a, c, kPrec);
        const auto r = structural_residuals(s, kPrec);
        EXPECT_LT(r.derivative, kPrec.tolerance());
        EXPECT_LT(r.reciprocal, kPrec.tolerance());
    }
    EXPECT_THROW(structural_constants(2, 4, kPrec), PreconditionError);
}

TEST(Roots, ClassificationAtHalfRho)
{
    WorkingPrecision wp(kPrec);
    for (auto [a, c] : std::vector<std::pair<int, int>>{{1, 1}, {2, 3}, {2, 5}, {3, 5}}) {
        const auto s = structural_constants(a, c, kPrec);
        const auto r = kernel_roots_at(a, c, Complex(s.rho / 2), kPrec);
        EXPECT_EQ(r.small.size(), static_cast<std::size_t>(a));
        EXPECT_EQ(r.large.size(), static_cast<std::size_t>(c));
        Real max_small = 0, min_large = -1;
        for (const auto& u : r.small) max_small = std::max(max_small, abs(u));
        for (const auto& u : r.large) min_large = min_large < 0 ? abs(u) : std::min(min_large, abs(u));
        EXPECT_LT(max_small, min_large);
    }
}

TEST(Roots, RealRootsAtSingularity)
{
    WorkingPrecision wp(kPrec);
    const auto s = structural_constants(2, 5, kPrec);
    const auto r = kernel_roots_at(2, 5, Complex(s.rho), kPrec);
    bool found_tau = false;
    for (const auto& u : r.small)
        if (abs(u - Complex(s.tau)) < Real("1e-20")) found_tau = true;
    EXPECT_TRUE(found_tau);
    const Real t2 = slope25_tau2(kPrec);
    EXPECT_EQ(to_fixed(t2, 9), "-0.707723271");
    EXPECT_LT(abs(tau2_annihilator(t2)), Real("1e-30"));
}

TEST(Roots, SmallRootSymmetricsMatchSeries)
{
    WorkingPrecision wp(kPrec);
    for (auto [a, c] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 5}}) {
        const auto s = structural_constants(a, c, kPrec);
        const Real z = s.rho / 2;
        const auto roots = small_branches_at(a, c, Complex(z), kPrec);
        ASSERT_EQ(roots.size(), static_cast<std::size_t>(a));
        // Elementary symmetric functions of the numeric roots.
        std::vector<Complex> e(static_cast<std::size_t>(a) + 1, Complex(Real(0)));
        e[0] = Complex(Real(1));
        for (const auto& u : roots)
            for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] += e[k - 1] * u;
        const auto sym = small_branch_symmetrics(a, c, 220);
        for (std::size_t k = 1; k <= static_cast<std::size_t>(a); ++k) {
            const Real series_value = eval_series(sym.elementary[k - 1], z);
            EXPECT_LT(abs(e[k] - Complex(series_value)), Real("1e-25")) << a << "/" << c << " e_" << k;
        }
    }
}

TEST(Roots, AberthOnKnownPolynomial)
{
    WorkingPrecision wp(kPrec);
    // (x - 1)(x - 2)(x + 3) = x^3 - 7x + 6, coefficients low to high.
    const ComplexPoly p{Complex(Real(6)), Complex(Real(-7)), Complex(Real(0)), Complex(Real(1))};
    const auto roots = aberth_roots(p, {Complex(Real("0.5"), Real("0.3")), Complex(Real(3), Real("-0.2")),
                                        Complex(Real(-1), Real("0.7"))},
                                    kPrec.tolerance());
    for (const Real& target : {Real(1), Real(2), Real(-3)}) {
        Real best = 1;
        for (const auto& r : roots) best = std::min(best, abs(r - Complex(target)));
        EXPECT_LT(best, Real("1e-35"));
    }
}

TEST(Rotation, LawHolds)
{
    WorkingPrecision wp(kPrec);
    for (auto [a, c, kappa] : std::vector<std::array<int, 3>>{{2, 5, 3}, {2, 3, 2}, {1, 1, 1}, {3, 5, 5}}) {
        EXPECT_EQ(rotation_exponent(a, c), kappa);
        const auto s = structural_constants(a, c, kPrec);
        const auto rep = rotation_law_check(a, c, rotation_samples(s, 10), Real("1e-30"), kPrec);
        EXPECT_TRUE(rep.passed) << a << "/" << c << " max deviation " << to_scientific(rep.max_deviation, 3);
        EXPECT_TRUE(rep.consistent_sigma);
    }
}

TEST(Rotation, SpecificSample)
{
    WorkingPrecision wp(kPrec);
    const auto s = structural_constants(2, 5, kPrec);
    const Complex z = Complex::polar(s.rho / 2, real_pi() / 5);
    const auto rep = rotation_law_check(2, 5, {z}, Real("1e-30"), kPrec);
    EXPECT_TRUE(rep.passed);
    EXPECT_EQ(rep.samples.front().sigma, (std::vector<std::size_t>{1, 0}));
}

TEST(Puiseux, SquareRootExpansionOfSingularBranch)
{
    WorkingPrecision wp(kPrec);
    const auto s = structural_constants(2, 5, kPrec);
    const auto ex = singular_branch_expansion(s, kPrec);
    EXPECT_LT(ex.C, 0);
    EXPECT_LT(abs(ex.D), Real("1e-40"));
    EXPECT_LT(abs(ex.C_prime / ex.C - Real(2) / 5), Real("1e-40"));

    // Fit the e^(3/2) coefficient from the numeric branch.
    for (const char* eps_text : {"1e-6", "1e-8"}) {
        const Real eps(eps_text);
        const Real u = positive_real_small_root(2, 5, s.rho * (1 - eps));
        const Real fitted = (u - s.tau - ex.C * sqrt(eps) - ex.D * eps) / (eps * sqrt(eps));
        EXPECT_LT(abs(fitted - ex.C_prime), Real("1e-2")) << eps_text;
        EXPECT_GT(abs(fitted + ex.C / 2), Real("0.1"));
    }
}

TEST(Puiseux, RegularBranchSlope)
{
    WorkingPrecision wp(kPrec);
    const auto s = structural_constants(2, 5, kPrec);
    const Real t2 = slope25_tau2(kPrec);
    const Real t7 = pow(t2, 7L);
    const Real d7 = t2 * (t7 + 1) / (5 * t7 - 2);
    EXPECT_LT(abs(regular_branch_slope(s, t2) - d7), Real("1e-40"));

    const Real eps("1e-10");
    const auto r = kernel_roots_at(2, 5, Complex(s.rho * (1 - eps)), kPrec);
    Real u2 = 0;
    for (const auto& u : r.small)
        if (u.re < 0) u2 = u.re;
    EXPECT_LT(abs((u2 - t2) / eps - d7), Real("1e-6"));
}

TEST(Extractor, Basics)
{
    WorkingPrecision wp(kPrec);
    EXPECT_EQ(local_extractor({{BigRational(0), Real(1)}}, Real(1), 3), Real(0));
    EXPECT_LT(abs(local_extractor({{make_rational(1, 2), Real(1)}}, Real(1), 2) + Real(1) / 8), Real("1e-45"));
    EXPECT_LT(abs(singular_coefficient(make_rational(1, 2), Real(1), 1) + Real(1) / 2), Real("1e-45"));
}

TEST(Extractor, DyckSanity)
{
    WorkingPrecision wp(kPrec);
    const std::vector<PuiseuxTerm> terms{{make_rational(1, 2), -2 * sqrt(Real(2))}};
    Real prev_err = 1;
    for (std::uint64_t n = 10; n <= 20; ++n) {
        const Real approx = 2 * local_extractor(terms, Real(1) / 2, 2 * n);
        const auto nn = static_cast<std::int64_t>(n);
        const Real exact = to_real(BigRational(binomial(2 * nn, nn)) / BigRational(nn + 1));
        const Real err = abs(approx / exact - 1);
        EXPECT_LT(err, Real(2) / Real(static_cast<long>(n)));
        EXPECT_LT(err, prev_err);
        prev_err = err;
    }
}

TEST(Knuth, Constants)
{
    const auto k = knuth_constants(kPrec);
    WorkingPrecision wp(kPrec);
    EXPECT_LT(abs(k.kappa1 - Real("1.6302576629903501404248")), Real("1e-21"));
    EXPECT_LT(abs(k.kappa2 - Real("0.1586682269720227755147")), Real("1e-21"));
    EXPECT_LT(k.kappa1_residual, Real("1e-38"));
    EXPECT_LT(k.kappa2_residual, Real("1e-30"));
    EXPECT_LT(k.tau2_residual, Real("1e-30"));
    EXPECT_LT(k.kappa2_relation, Real("1e-30"));
    EXPECT_LT(abs(k.kappa1 - (-5 / (pow(k.mu, 4L) + 2 * pow(k.mu, 3L) + 3 * k.mu * k.mu + 4 * k.mu) - 1)),
              Real("1e-40"));
    EXPECT_EQ(kappa2_minpoly(Real(0)), Real(-142));
    EXPECT_THROW(knuth_constants(Precision{20, 10}), PreconditionError);
}

TEST(Knuth, ResidualShrinksWithPrecision)
{
    const Real r30 = kappa2_minpoly_residual(Precision{30, 5});
    const Real r40 = kappa2_minpoly_residual(Precision{40, 5});
    const Real r50 = kappa2_minpoly_residual(Precision{50, 5});
    EXPECT_GT(r30, r40);
    EXPECT_GT(r40, r50);
}

TEST(Knuth, CoefficientAsymptotics)
{
    const auto k = knuth_constants(kPrec);
    WorkingPrecision wp(kPrec);
    const auto jumps = JumpPolynomial::two_jump(2, 5);
    Real prev = 1;
    for (std::int64_t n : {10, 20, 40}) {
        const BigInt A = count_directed(jumps, 7 * n - 2, 4, 1, true);
        const BigInt B = count_directed(jumps, 7 * n - 2, 3, 0, true);
        const auto est = an_bn_asymptotic(n, k);
        const Real errA = abs(est.A / to_real(A) - 1);
        EXPECT_LT(errA, prev);
        prev = errA;
        if (n == 40) {
            EXPECT_LT(errA, Real("0.01"));
            EXPECT_LT(abs(est.B / to_real(B) - 1), Real("0.01"));
        }
    }
    const auto est50 = an_bn_asymptotic(50, k);
    EXPECT_LT(abs(est50.sum / to_real(knuth_sum(50)) - 1), Real("0.02"));
}

TEST(Knuth, RatioSecondOrder)
{
    const auto k = knuth_constants(kPrec);
    WorkingPrecision wp(kPrec);
    const auto [f0, g1] = slope25_F0_G1(7 * 61 - 2);
    auto ratio = [&](std::int64_t n) {
        const auto i = static_cast<std::size_t>(7 * n - 2);
        return to_real(g1[i] / f0[i]);
    };
    EXPECT_LT(abs(ratio(60) - (k.kappa1 - k.kappa2 / 60)), Real("1e-3"));
    // Finite difference of n (kappa1 - ratio(n)) tends to kappa2.
    const Real d = 61 * (k.kappa1 - ratio(61)) - 60 * (k.kappa1 - ratio(60));
    const Real level = 60 * (k.kappa1 - ratio(60));
    EXPECT_LT(abs(level / k.kappa2 - 1), Real("0.05"));
    EXPECT_LT(abs(d), Real("0.01"));
}

TEST(Area, ConstantAndSmallN)
{
    WorkingPrecision wp(kPrec);
    EXPECT_LT(abs(duchon_area_constant(kPrec) - Real("3.432342124")), Real("1e-9"));
    const auto row = area_row(2, 3, 5);
    EXPECT_EQ(row.mean_area, make_rational(25, 2));
    EXPECT_EQ(to_fixed(row.directed_ratio, 3), "1.118");
}

TEST(Area, ExtrapolationOnModerateGrid)
{
    const auto rep = area_convergence_report({100, 200, 400}, kPrec);
    WorkingPrecision wp(kPrec);
    EXPECT_LT(rep.relative_error, Real("0.02"));
    EXPECT_LT(rep.raw_relative_error, Real("0.15"));
    EXPECT_THROW(area_convergence_report({100, 200, 401}, kPrec), PreconditionError);
}
