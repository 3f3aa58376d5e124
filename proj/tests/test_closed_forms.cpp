#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "slopewalk/closed_forms.hpp"
#include "slopewalk/errors.hpp"
#include "slopewalk/kernel_series.hpp"
#include "slopewalk/lattice_enum.hpp"

using namespace slopewalk;

TEST(RationalCatalan, Examples)
{
    EXPECT_EQ(rational_catalan(1, 1), 1);
    EXPECT_EQ(rational_catalan(2, 3), 2);
    EXPECT_EQ(rational_catalan(2, 5), 3);
    EXPECT_EQ(rational_catalan(2, 5), count_ne_below(RationalSlope(2, 0, 5, Boundary::Touch), {5, 2}));
    EXPECT_THROW(rational_catalan(2, 4), IntegralityError);
}

TEST(Bizley, Sequences)
{
    const std::vector<BigInt> duchon{1, 2, 23, 377, 7229, 151491, 3361598};
    EXPECT_EQ(bizley_series(2, 3, 6), duchon);
    const std::vector<BigInt> catalan{1, 1, 2, 5, 14};
    EXPECT_EQ(bizley_series(1, 1, 4), catalan);
    const BigRational c1 = bizley_c(2, 3, 1), c2 = bizley_c(2, 3, 2);
    EXPECT_EQ(c1, BigRational(2));
    EXPECT_EQ(c2, BigRational(21));
    EXPECT_EQ(c2 + c1 * c1 / 2, BigRational(23));
}

TEST(Bizley, GrossmanAndDP)
{
    for (auto [a, b] : std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 2}, {2, 3}, {2, 5}, {3, 5}, {1, 1}}) {
        const auto series = bizley_series(a, b, 8);
        EXPECT_EQ(grossman_sum(a, b, 1), rational_catalan(a, b));
        for (std::size_t k = 1; k <= 8; ++k) {
            EXPECT_EQ(series[k], grossman_sum(a, b, k)) << a << "," << b << " k=" << k;
            if (k <= 4) {
                const auto kk = static_cast<std::int64_t>(k);
                EXPECT_EQ(series[k], count_ne_below(RationalSlope(a, 0, b, Boundary::Touch), {b * kk, a * kk}));
            }
        }
    }
    EXPECT_EQ(grossman_sum(2, 3, 3), 377);
}

TEST(Knuth, Values)
{
    EXPECT_EQ(knuth_sum(1), 5);
    EXPECT_EQ(knuth_sum(2), 110);
    const auto [f0, g1] = slope25_F0_G1(54);
    for (std::int64_t n = 1; n <= 8; ++n) {
        const auto k = static_cast<std::size_t>(7 * n - 2);
        EXPECT_EQ(BigRational(knuth_sum(n)), f0[k] + g1[k]);
        EXPECT_EQ(knuth_sum(n), general_sum(2, 5, 0, n));
    }
}

TEST(Knuth, Recurrence)
{
    EXPECT_EQ(knuth_recurrence_ratio(1), BigRational(22));
    for (std::int64_t n = 1; n <= 20; ++n) EXPECT_TRUE(recurrence_check(n)) << n;
    EXPECT_THROW(recurrence_check(0), PreconditionError);
}

TEST(StartingPoints, Examples)
{
    const auto f = starting_points(2, 2, 5);
    EXPECT_EQ(f.r_a, -4);
    EXPECT_EQ(f.r_c, 2);
    EXPECT_EQ(f.s0, 0);
    for (std::int64_t s = 0; s <= 4; ++s) EXPECT_EQ(f.point(s), (Point{5 * s + 4, 2 * s + 2}));
    EXPECT_THROW(starting_points(2, 1, 4), NoSolution);

    const auto g = starting_points(3, 6, 5);
    EXPECT_EQ(3 * g.r_a + 5 * g.r_c, 6);
    for (std::int64_t s = g.s0; s <= g.s0 + 5; ++s) {
        const Point p = g.point(s);
        EXPECT_EQ(5 * p.y, 3 * p.x + 6);
    }
}

TEST(StartingPoints, BezoutOverRandomSlopes)
{
    for (std::int64_t a = 1; a <= 7; ++a)
        for (std::int64_t c = 1; c <= 7; ++c)
            for (std::int64_t b = 1; b <= 9; ++b) {
                if (b % std::gcd(a, c) != 0) {
                    EXPECT_THROW(starting_points(a, b, c), NoSolution);
                    continue;
                }
                const auto f = starting_points(a, b, c);
                EXPECT_EQ(a * f.r_a + c * f.r_c, b);
                const Point p = f.point(f.s0);
                EXPECT_GE(p.x, 0);
                EXPECT_GE(p.y, 0);
                const Point prev = f.point(f.s0 - 1);
                EXPECT_TRUE(prev.x < 0 || prev.y < 0);
            }
}

TEST(Naka, Examples)
{
    EXPECT_EQ(naka_integral(2, 2, 5, 0), BigRational(1));
    EXPECT_EQ(naka_integral_dp(2, 2, 5, 0), BigRational(1));
    EXPECT_EQ(naka_integral(2, 2, 5, 1), BigRational(22));
    for (std::int64_t s = 0; s <= 2; ++s)
        EXPECT_EQ(naka_integral(2, 2, 5, s),
                  make_rational(2, 5) / BigRational(7 * s + 6) * BigRational(binomial(7 * s + 6, 2 * s + 2)));
}

TEST(Naka, ClosedFormMatchesDP)
{
    for (auto [a, b, c] : std::vector<std::array<std::int64_t, 3>>{
             {2, 2, 5}, {1, 1, 1}, {1, 1, 2}, {2, 1, 3}, {3, 2, 4}, {2, 3, 5}, {3, 6, 5}, {4, 2, 6}}) {
        const auto f = starting_points(a, b, c);
        for (std::int64_t s = f.s0; s <= f.s0 + 3; ++s) {
            if (f.path_length(s) <= 0 || f.point(s).y < 1) continue;
            EXPECT_EQ(naka_integral(a, b, c, s), naka_integral_dp(a, b, c, s))
                << "(" << a << "," << b << "," << c << ") s=" << s;
            EXPECT_EQ(general_slope_sum(a, b, c, s), general_slope_sum_dp(a, b, c, s));
        }
    }
}

TEST(Naka, UnitSlopeBallot)
{
    for (std::int64_t s = 1; s <= 6; ++s) {
        EXPECT_EQ(naka_integral(1, 1, 1, s), naka_integral_dp(1, 1, 1, s));
        EXPECT_EQ(general_slope_sum(1, 1, 1, s), general_slope_sum_dp(1, 1, 1, s));
    }
}

TEST(GeneralSum, Examples)
{
    EXPECT_EQ(general_sum(2, 5, 0, 1), 5);
    EXPECT_EQ(general_sum(2, 5, 1, 1), 7);
    EXPECT_EQ(general_sum(3, 7, 1, 1), general_sum_dp(3, 7, 1, 1));
    for (std::int64_t s = 1; s <= 4; ++s)
        EXPECT_EQ(BigRational(general_sum(2, 5, 1, s)), BigRational(binomial(7 * s, 2 * s - 1)) / BigRational(s));
    EXPECT_THROW(general_sum(2, 4, 0, 1), PreconditionError);
    EXPECT_THROW(general_sum(2, 5, 2, 1), PreconditionError);
}

TEST(GeneralSum, AllAdmissibleSmallCases)
{
    for (std::int64_t a = 1; a < 10; ++a)
        for (std::int64_t c = a + 1; a + c <= 10; ++c) {
            if (std::gcd(a, c) != 1) continue;
            for (std::int64_t l = 0; (l + 1) * a < c; ++l)
                for (std::int64_t s = 1; s <= 3; ++s)
                    EXPECT_EQ(general_sum(a, c, l, s), general_sum_dp(a, c, l, s))
                        << "(a,c,l,s)=(" << a << "," << c << "," << l << "," << s << ")";
        }
}

TEST(Trees, Series)
{
    const auto cat = tree_series(2, 1, 4);
    const auto tern = tree_series(3, 1, 4);
    const std::vector<int> cv{1, 1, 2, 5, 14}, tv{1, 1, 3, 12, 55};
    for (std::size_t k = 0; k <= 4; ++k) {
        EXPECT_EQ(cat[k], BigRational(cv[k]));
        EXPECT_EQ(tern[k], BigRational(tv[k]));
    }
    EXPECT_THROW(tree_series(-1, 2, 4), PreconditionError);
}

TEST(Trees, Identities)
{
    EXPECT_TRUE(log_tree_identity_check(2, 20));
    EXPECT_TRUE(log_tree_identity_check(make_rational(5, 2), 20));
    EXPECT_TRUE(log_tree_identity_check(3, 0));
    EXPECT_TRUE(half_tree_identity_check(30));
    for (const BigRational& t : {BigRational(2), BigRational(3), make_rational(3, 2), make_rational(7, 3)})
        EXPECT_TRUE(log_tree_identity_check(t, 30));
}
