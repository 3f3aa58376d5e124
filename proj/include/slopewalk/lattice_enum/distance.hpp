#pragma once

#include <cstdint>
#include <vector>

#include "slopewalk/errors.hpp"
#include "slopewalk/exactmath/rational.hpp"
#include "slopewalk/lattice_enum/ne_paths.hpp"
#include "slopewalk/lattice_enum/slope.hpp"

namespace slopewalk {

/**
 * Minimum vertical distance delta(w) between a South/West walk and the line
 * y = (a x + b)/c. The walk is given by its points, starting at Q on the
 * line and ending at the origin. delta is 0 as soon as any point after Q
 * lies on or above the line; otherwise it is the least gap over those points.
 */
inline BigRational min_y_distance(const RationalSlope& slope, const std::vector<Point>& walk)
{
    detail::require(walk.size() >= 2, "walk needs at least one step");
    detail::require(slope.gap(walk.front()) == 0, "walk must start on the boundary line");
    detail::require(walk.back() == Point{0, 0}, "walk must end at the origin");
    std::int64_t best = -1;
    for (std::size_t i = 1; i < walk.size(); ++i) {
        const std::int64_t dx = walk[i].x - walk[i - 1].x;
        const std::int64_t dy = walk[i].y - walk[i - 1].y;
        if (!((dx == -1 && dy == 0) || (dx == 0 && dy == -1)))
            throw PreconditionError("min_y_distance: step " + std::to_string(i) + " is not South or West");
        const std::int64_t g = slope.gap(walk[i]);
        if (g <= 0) return 0;
        if (best < 0 || g < best) best = g;
    }
    return make_rational(best, slope.c());
}

/**
 * |W_t| for walks from Q on the line to the origin. With k = ceil(c t), a
 * walk is in W_t iff it starts with a South step and every later point has
 * a x + b - c y >= k, i.e. the NE path from the origin to (q1, q2 - 1) stays
 * weakly below y = (a x + b - k)/c.
 */
inline BigInt count_W_t(const RationalSlope& slope, Point q, const BigRational& t)
{
    detail::require(slope.gap(q) == 0, "count_W_t: Q must lie on the boundary line");
    detail::require(q.x >= 0 && q.y >= 1, "count_W_t: Q must have q1 >= 0, q2 >= 1");
    detail::require(t > 0 && t <= 1, "count_W_t: need 0 < t <= 1");
    const BigInt kk = ceil(t * slope.c());
    const std::int64_t k = kk.get_si();
    if (k > slope.b()) return 0;
    return count_ne_below(RationalSlope(slope.a(), slope.b() - k, slope.c(), Boundary::Touch), {q.x, q.y - 1});
}

struct DistanceProfile {
    Point q;
    std::vector<BigRational> t_grid;  // 1/c, 2/c, ..., c/c
    std::vector<BigInt> counts;       // |W_t| at each grid value

    // Integral of |W_t| over (0, 1]; |W_t| is a left-continuous step function.
    BigRational integral() const
    {
        BigRational total = 0;
        for (const auto& n : counts) total += BigRational(n);
        return t_grid.empty() ? BigRational(0) : total * t_grid.front();
    }
};

inline DistanceProfile distance_profile(const RationalSlope& slope, Point q)
{
    DistanceProfile prof{q, {}, {}};
    for (std::int64_t k = 1; k <= slope.c(); ++k) {
        prof.t_grid.push_back(make_rational(k, slope.c()));
        prof.counts.push_back(count_W_t(slope, q, prof.t_grid.back()));
    }
    return prof;
}

} // namespace slopewalk
