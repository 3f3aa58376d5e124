#pragma once

#include <cstdint>
#include <vector>

#include "slopewalk/errors.hpp"
#include "slopewalk/exactmath/rational.hpp"
#include "slopewalk/lattice_enum/slope.hpp"

namespace slopewalk {

/// Number of North/East paths from the origin to `end` whose lattice points
/// all satisfy slope.admits(). Zero when either endpoint is inadmissible.
inline BigInt count_ne_below(const RationalSlope& slope, Point end)
{
    detail::require(end.x >= 0 && end.y >= 0, "count_ne_below: endpoint must lie in the first quadrant");
    if (!slope.admits({0, 0}) || !slope.admits(end)) return 0;

    // row[x] holds the count for the current y.
    std::vector<BigInt> row(static_cast<std::size_t>(end.x + 1), BigInt(0));
    for (std::int64_t y = 0; y <= end.y; ++y) {
        for (std::int64_t x = 0; x <= end.x; ++x) {
            auto& cell = row[static_cast<std::size_t>(x)];
            if (!slope.admits({x, y})) {
                cell = 0;
                continue;
            }
            if (x == 0 && y == 0) {
                cell = 1;
                continue;
            }
            // cell already holds the value from (x, y-1).
            if (x > 0) cell += row[static_cast<std::size_t>(x - 1)];
        }
    }
    return row.back();
}

/// Affine map (x, y) -> (x + y, a x - c y + b) sending NE paths below the
/// line to directed walks with jumps +a and -c started at altitude b.
inline Point bijection_map(const RationalSlope& slope, Point p)
{
    return {p.x + p.y, slope.a() * p.x - slope.c() * p.y + slope.b()};
}

/// Image of a whole NE path given by its lattice points from the origin.
inline std::vector<Point> bijection_map(const RationalSlope& slope, const std::vector<Point>& path)
{
    detail::require(!path.empty() && path.front() == Point{0, 0}, "NE path must start at the origin");
    std::vector<Point> image;
    image.reserve(path.size());
    image.push_back(bijection_map(slope, path.front()));
    for (std::size_t i = 1; i < path.size(); ++i) {
        const std::int64_t dx = path[i].x - path[i - 1].x;
        const std::int64_t dy = path[i].y - path[i - 1].y;
        if (!((dx == 1 && dy == 0) || (dx == 0 && dy == 1)))
            throw PreconditionError("bijection_map: step " + std::to_string(i) + " is not North or East");
        image.push_back(bijection_map(slope, path[i]));
    }
    return image;
}

} // namespace slopewalk
