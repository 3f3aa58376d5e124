#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "slopewalk/errors.hpp"
#include "slopewalk/exactmath.hpp"
#include "slopewalk/lattice_enum.hpp"

using namespace slopewalk;

namespace {

std::vector<Point> to_points(const std::vector<std::pair<long, long>>& v)
{
    std::vector<Point> out;
    for (auto [x, y] : v) out.push_back({x, y});
    return out;
}

} // namespace

TEST(CountNE, Examples)
{
    EXPECT_EQ(count_ne_below(RationalSlope(2, 2, 5), {0, 0}), 1);
    EXPECT_EQ(count_ne_below(RationalSlope(3, 1, 4), {0, 0}), 1);
    EXPECT_EQ(count_ne_below(RationalSlope(2, 2, 5, Boundary::Strict), {4, 1}), 3);
    EXPECT_EQ(count_ne_below(RationalSlope(2, 0, 3, Boundary::Touch), {3, 2}), 2);
}

TEST(CountNE, MatchesExhaustiveEnumeration)
{
    for (std::int64_t a = 1; a <= 3; ++a)
        for (std::int64_t b = 0; b <= 3; ++b)
            for (std::int64_t c = 1; c <= 3; ++c)
                for (Boundary bd : {Boundary::Strict, Boundary::Touch}) {
                    if (bd == Boundary::Strict && b == 0) continue;
                    const RationalSlope s(a, b, c, bd);
                    for (long x = 0; x <= 6; ++x)
                        for (long y = 0; y <= 6; ++y) {
                            auto keep = [&](long px, long py) { return s.admits({px, py}); };
                            const auto paths = oracle::enumerate_ne_paths(x, y, keep);
                            EXPECT_EQ(count_ne_below(s, {x, y}), BigInt(static_cast<unsigned long>(paths.size())));
                        }
                }
}

TEST(CountDirected, Examples)
{
    const auto j25 = JumpPolynomial::two_jump(2, 5);
    EXPECT_EQ(count_directed(j25, 0, 3, 3, true), 1);
    EXPECT_EQ(count_directed(j25, 5, 4, 1, true), 3);
    EXPECT_EQ(count_directed(j25, 5, 3, 0, true), 2);
}

TEST(CountDirected, MatchesExhaustiveEnumeration)
{
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> jump(1, 4), start(0, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const int a = jump(rng), c = jump(rng);
        const long h = start(rng);
        const int n = 1 + trial % 12;
        const auto jumps = JumpPolynomial::two_jump(a, c);
        for (bool constrained : {true, false}) {
            const auto all = oracle::enumerate_directed({-a, c}, n, h, std::nullopt, constrained);
            EXPECT_EQ(count_directed(jumps, n, h, std::nullopt, constrained), all.count);
            for (long e = 0; e <= 6; ++e) {
                const auto fixed = oracle::enumerate_directed({-a, c}, n, h, e, constrained);
                EXPECT_EQ(count_directed(jumps, n, h, e, constrained), fixed.count);
            }
        }
    }
}

TEST(CountDirected, WeightedCountsScale)
{
    const JumpPolynomial w({{-1, make_rational(1, 2)}, {1, BigRational(3)}});
    // 2-step bridges from 0: up-down and down-up, each weight 3/2.
    EXPECT_EQ(weighted_count_directed(w, 2, 0, 0, false), BigRational(3));
    EXPECT_EQ(weighted_count_directed(w, 2, 0, 0, true), make_rational(3, 2));
    EXPECT_THROW(count_directed(w, 2, 0, 0, false), PreconditionError);
}

TEST(Bijection, PointImages)
{
    const RationalSlope s(2, 2, 5);
    EXPECT_EQ(bijection_map(s, Point{0, 0}), (Point{0, 2}));
    for (std::int64_t x = 0; x < 5; ++x)
        for (std::int64_t y = 0; y < 5; ++y) {
            EXPECT_EQ(bijection_map(s, Point{x + 1, y}).y - bijection_map(s, Point{x, y}).y, 2);
            EXPECT_EQ(bijection_map(s, Point{x, y + 1}).y - bijection_map(s, Point{x, y}).y, -5);
        }
}

TEST(Bijection, PathsBelowLineAreExactlyPositiveWalks)
{
    const RationalSlope s(2, 2, 5);
    const auto all = oracle::enumerate_ne_paths(5, 2, [](long, long) { return true; });
    std::size_t below = 0;
    for (const auto& p : all) {
        const auto pts = to_points(p.points);
        bool admitted = true;
        for (const auto& q : pts) admitted = admitted && s.admits(q);
        bool positive = true;
        for (const auto& q : bijection_map(s, pts)) positive = positive && q.y > 0;
        EXPECT_EQ(admitted, positive);
        below += admitted;
    }
    EXPECT_EQ(BigInt(static_cast<unsigned long>(below)), count_ne_below(s, {5, 2}));
}

TEST(Bijection, CountsAgreeWithDirectedModel)
{
    for (std::int64_t a = 1; a <= 4; ++a)
        for (std::int64_t b = 0; b <= 4; ++b)
            for (std::int64_t c = 1; c <= 4; ++c)
                for (Boundary bd : {Boundary::Strict, Boundary::Touch}) {
                    if (bd == Boundary::Strict && b == 0) continue;
                    const RationalSlope s(a, b, c, bd);
                    const std::int64_t h0 = s.touch_offset();
                    const auto jumps = JumpPolynomial::two_jump(s.c(), s.a());
                    for (std::int64_t x = 0; x <= 12; ++x)
                        for (std::int64_t y = 0; x + y <= 12; ++y) {
                            const std::int64_t end = s.a() * x - s.c() * y + h0;
                            const BigInt dp = end < 0 ? BigInt(0) : count_directed(jumps, x + y, h0, end, true);
                            ASSERT_EQ(count_ne_below(s, {x, y}), dp)
                                << "(a,b,c)=(" << a << "," << b << "," << c << ") end (" << x << "," << y << ")";
                        }
                }
}

TEST(Support, BridgesNonzeroExactlyOnLattice)
{
    for (auto [a, c] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}, {1, 2}}) {
        const auto jumps = JumpPolynomial::two_jump(a, c);
        for (std::int64_t n = 0; n <= 30; ++n)
            for (std::int64_t d = -12; d <= 12; ++d) {
                // up * c - (n - up) * a = d
                std::optional<std::int64_t> up;
                if ((d + a * n) % (a + c) == 0) {
                    const std::int64_t u = (d + a * n) / (a + c);
                    if (u >= 0 && u <= n) up = u;
                }
                const BigInt got = count_directed(jumps, n, 20, 20 + d, false);
                EXPECT_EQ(got, up ? binomial(n, *up) : BigInt(0)) << "n=" << n << " d=" << d;
            }
    }
}

TEST(Excursions, TimeReversalSymmetry)
{
    for (auto [a, c] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {1, 3}, {3, 4}})
        for (std::int64_t n = 0; n <= 30; ++n)
            EXPECT_EQ(count_directed(JumpPolynomial::two_jump(a, c), n, 0, 0, true),
                      count_directed(JumpPolynomial::two_jump(c, a), n, 0, 0, true));
}

TEST(Area, SmallExamples)
{
    const JumpPolynomial duchon({{2, BigRational(1)}, {-3, BigRational(1)}});
    EXPECT_EQ(mean_excursion_area(duchon, 0), BigRational(0));
    EXPECT_EQ(mean_excursion_area(duchon, 5), make_rational(25, 2));
    const auto st = excursion_area_stats(duchon, 10);
    EXPECT_EQ(st.count, 23);
    const auto brute = oracle::enumerate_directed({2, -3}, 10, 0, 0, true);
    EXPECT_EQ(st.total_area, brute.area);
    EXPECT_THROW(mean_excursion_area(duchon, 3), PreconditionError);
}

TEST(Area, DPMatchesEnumerationUpTo15)
{
    for (auto [up, down] : std::vector<std::pair<int, int>>{{2, 3}, {1, 1}, {3, 2}, {1, 2}})
        for (int n = 0; n <= 15; ++n) {
            const JumpPolynomial jumps({{up, BigRational(1)}, {-down, BigRational(1)}});
            const auto st = excursion_area_stats(jumps, n);
            const auto brute = oracle::enumerate_directed({up, -down}, n, 0, 0, true);
            EXPECT_EQ(st.count, brute.count);
            EXPECT_EQ(st.total_area, brute.area) << "n=" << n;
        }
}

TEST(Area, TableAreaPerAltitude)
{
    DirectedQuery q{JumpPolynomial::two_jump(1, 1), 6, 0, std::nullopt, true, true, true};
    CountTable t(q);
    for (std::int64_t h = 0; h <= 6; ++h) {
        const auto brute = oracle::enumerate_directed({-1, 1}, 6, 0, h, true);
        EXPECT_EQ(t.count(6, h), brute.count);
        EXPECT_EQ(t.area_sum(6, h), brute.area);
    }
}

TEST(Distance, WalksOfSmallExample)
{
    const RationalSlope s(2, 2, 5);
    std::vector<BigRational> deltas;
    for (const auto& w : oracle::enumerate_sw_walks(4, 2)) deltas.push_back(min_y_distance(s, to_points(w)));
    std::size_t ge1 = 0, ge2 = 0, ge3 = 0;
    for (const auto& d : deltas) {
        ge1 += d >= make_rational(1, 5);
        ge2 += d >= make_rational(2, 5);
        ge3 += d >= make_rational(3, 5);
    }
    EXPECT_EQ(ge1, 3u);
    EXPECT_EQ(ge2, 2u);
    EXPECT_EQ(ge3, 0u);
    // South first, then hugging the line from below.
    const std::vector<Point> first{{4, 2}, {4, 1}, {3, 1}, {2, 1}, {2, 0}, {1, 0}, {0, 0}};
    EXPECT_EQ(min_y_distance(s, first), make_rational(1, 5));
    const std::vector<Point> west_first{{4, 2}, {3, 2}, {3, 1}, {2, 1}, {1, 1}, {1, 0}, {0, 0}};
    EXPECT_EQ(min_y_distance(s, west_first), BigRational(0));
}

TEST(Distance, CountWtExamples)
{
    const RationalSlope s(2, 2, 5);
    EXPECT_EQ(count_W_t(s, {4, 2}, make_rational(1, 5)), 3);
    EXPECT_EQ(count_W_t(s, {4, 2}, make_rational(2, 5)), 2);
    EXPECT_EQ(count_W_t(s, {4, 2}, make_rational(3, 5)), 0);
    EXPECT_EQ(count_W_t(s, {4, 2}, make_rational(4, 5)), 0);
    EXPECT_EQ(distance_profile(s, {4, 2}).integral(), BigRational(1));
}

TEST(Distance, CountWtMatchesBruteForceAndIsMonotone)
{
    for (std::int64_t a = 1; a <= 3; ++a)
        for (std::int64_t b = 1; b <= 4; ++b)
            for (std::int64_t c = 2; c <= 5; ++c) {
                const RationalSlope s(a, b, c, Boundary::Touch);
                for (std::int64_t qx = 0; qx <= 7; ++qx) {
                    if ((s.a() * qx + s.b()) % s.c() != 0) continue;
                    const std::int64_t qy = (s.a() * qx + s.b()) / s.c();
                    if (qy < 1 || qx + qy > 11) continue;
                    const auto walks = oracle::enumerate_sw_walks(qx, qy);
                    const auto prof = distance_profile(s, {qx, qy});
                    for (std::size_t k = 0; k < prof.t_grid.size(); ++k) {
                        std::size_t brute = 0;
                        for (const auto& w : walks) brute += min_y_distance(s, to_points(w)) >= prof.t_grid[k];
                        EXPECT_EQ(prof.counts[k], BigInt(static_cast<unsigned long>(brute)));
                        if (k > 0) {
                            EXPECT_GE(prof.counts[k - 1], prof.counts[k]);
                        }
                        if (prof.t_grid[k] > make_rational(s.b(), s.c())) {
                            EXPECT_EQ(prof.counts[k], 0);
                        }
                    }
                }
            }
}

TEST(Distance, RejectsMalformedWalks)
{
    const RationalSlope s(2, 2, 5);
    EXPECT_THROW(min_y_distance(s, {{4, 2}, {3, 1}, {0, 0}}), PreconditionError);
    EXPECT_THROW(count_W_t(s, {3, 2}, make_rational(1, 5)), PreconditionError);
}
