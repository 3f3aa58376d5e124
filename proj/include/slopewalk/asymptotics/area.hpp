#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "slopewalk/asymptotics/real.hpp"
#include "slopewalk/errors.hpp"
#include "slopewalk/lattice_enum/count_table.hpp"

namespace slopewalk {

/// sqrt(15 pi) / 2.
inline Real duchon_area_constant(const Precision& prec)
{
    WorkingPrecision wp(prec);
    return sqrt(15 * real_pi()) / 2;
}

struct AreaRow {
    std::int64_t n = 0;        // excursion length (number of jumps)
    BigInt count;
    BigRational mean_area;     // trapezoid area under the directed excursion
    Real directed_ratio;       // m(n) / n^(3/2)
    Real slope_ratio;          // sqrt(a + c) m(n) / n^(3/2)
};

/**
 * Mean excursion areas for jumps +a/-c (Duchon: a = 2, c = 3) and their
 * normalized ratios. `slope_ratio` measures the area between the NE path
 * and the line (the directed area divided by the Jacobian a + c) against
 * n/(a+c), the unit in which the limit equals sqrt(15 pi)/2 for 2/3; the
 * plain directed ratio tends to that constant divided by sqrt(a + c).
 */
struct AreaConvergenceReport {
    std::int64_t a = 2, c = 3;
    std::vector<AreaRow> rows;
    Real K;                    // closed form
    Real extrapolated;         // fit K + c1/sqrt(n) + c2/n through the last three rows
    Real c1, c2;
    Real relative_error;       // |extrapolated / K - 1|
    Real raw_relative_error;   // |slope_ratio(last) / K - 1|
};

namespace detail {

// Solves the 3x3 system sum_j m[i][j] x[j] = rhs[i] by Cramer's rule.
inline std::array<Real, 3> solve3(const std::array<std::array<Real, 3>, 3>& m, const std::array<Real, 3>& rhs)
{
    auto det = [](const std::array<std::array<Real, 3>, 3>& x) {
        return x[0][0] * (x[1][1] * x[2][2] - x[1][2] * x[2][1]) - x[0][1] * (x[1][0] * x[2][2] - x[1][2] * x[2][0]) +
               x[0][2] * (x[1][0] * x[2][1] - x[1][1] * x[2][0]);
    };
    const Real d = det(m);
    if (d == 0) throw PreconditionError("singular extrapolation system");
    std::array<Real, 3> out;
    for (int k = 0; k < 3; ++k) {
        auto mk = m;
        for (int i = 0; i < 3; ++i) mk[i][k] = rhs[i];
        out[k] = det(mk) / d;
    }
    return out;
}

} // namespace detail

inline AreaRow area_row(std::int64_t a, std::int64_t c, std::int64_t n)
{
    const JumpPolynomial jumps({{a, BigRational(1)}, {-c, BigRational(1)}});
    const ExcursionAreaStats st = excursion_area_stats(jumps, n);
    if (st.count == 0) throw PreconditionError("no excursions of length " + std::to_string(n));
    AreaRow r;
    r.n = n;
    r.count = st.count;
    r.mean_area = st.mean();
    const Real nn = Real(n);
    r.directed_ratio = to_real(r.mean_area) / (nn * sqrt(nn));
    r.slope_ratio = sqrt(Real(a + c)) * r.directed_ratio;
    return r;
}

/// Exact mean areas at the given lengths (each a positive multiple of a + c, at most 5000).
inline AreaConvergenceReport area_convergence_report(const std::vector<std::int64_t>& lengths, const Precision& prec,
                                                     std::int64_t a = 2, std::int64_t c = 3)
{
    detail::require(lengths.size() >= 3, "area extrapolation needs at least three lengths");
    WorkingPrecision wp(prec);
    AreaConvergenceReport rep;
    rep.a = a;
    rep.c = c;
    for (std::int64_t n : lengths) {
        detail::require(n > 0 && n <= 5000, "area lengths must lie in 1..5000");
        detail::require(n % (a + c) == 0, "area lengths must be multiples of a + c");
        rep.rows.push_back(area_row(a, c, n));
    }
    rep.K = duchon_area_constant(prec);

    std::array<std::array<Real, 3>, 3> m;
    std::array<Real, 3> rhs;
    for (int i = 0; i < 3; ++i) {
        const AreaRow& r = rep.rows[rep.rows.size() - 3 + static_cast<std::size_t>(i)];
        const Real nn = Real(r.n);
        m[i] = {Real(1), 1 / sqrt(nn), 1 / nn};
        rhs[i] = r.slope_ratio;
    }
    const auto fit = detail::solve3(m, rhs);
    rep.extrapolated = fit[0];
    rep.c1 = fit[1];
    rep.c2 = fit[2];
    rep.relative_error = abs(rep.extrapolated / rep.K - 1);
    rep.raw_relative_error = abs(rep.rows.back().slope_ratio / rep.K - 1);
    return rep;
}

/// Geometric grid maxN/4, maxN/2, maxN rounded to multiples of 5.
inline AreaConvergenceReport area_convergence_report(std::int64_t max_n, const Precision& prec)
{
    detail::require(max_n >= 20 && max_n <= 5000, "convergence maxN must lie in 20..5000");
    auto round5 = [](std::int64_t n) { return std::max<std::int64_t>(5, n / 5 * 5); };
    return area_convergence_report({round5(max_n / 4), round5(max_n / 2), round5(max_n)}, prec);
}

} // namespace slopewalk
