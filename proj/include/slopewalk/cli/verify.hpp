#pragma once

#include <json.hpp>

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "slopewalk/asymptotics.hpp"
#include "slopewalk/closed_forms.hpp"
#include "slopewalk/errors.hpp"
#include "slopewalk/kernel_series.hpp"
#include "slopewalk/lattice_enum.hpp"

namespace slopewalk::cli {

using Json = nlohmann::ordered_json;

struct CheckResult {
    std::string name;
    bool passed = false;
    Json detail = Json::object();  // counterexample payload on failure
};

struct SuiteOptions {
    std::int64_t max = 6;
    std::int64_t a = 2, b = 5, c = 5;  // bizley uses (a, b); naka uses (a, b, c); rotation uses (a, c)
    Precision precision;
};

inline std::vector<std::string> suite_names()
{
    return {"knuth", "bizley", "naka", "general", "recurrence", "rotation", "tree", "kernel"};
}

namespace detail {

inline CheckResult equality_check(std::string name, const BigRational& lhs, const BigRational& rhs,
                                  const char* lhs_name, const char* rhs_name)
{
    CheckResult r{std::move(name), lhs == rhs, Json::object()};
    if (!r.passed) {
        r.detail[lhs_name] = lhs.get_str();
        r.detail[rhs_name] = rhs.get_str();
    }
    return r;
}

} // namespace detail

/// A_n + B_n from the path DP against the binomial closed form and the kernel series.
inline std::vector<CheckResult> knuth_suite(std::int64_t max_n)
{
    slopewalk::detail::require(max_n >= 1, "knuth suite needs --max >= 1");
    std::vector<CheckResult> out;
    const auto [f0, g1] = slope25_F0_G1(static_cast<std::size_t>(7 * max_n - 2));
    const JumpPolynomial jumps = JumpPolynomial::two_jump(2, 5);
    for (std::int64_t n = 1; n <= max_n; ++n) {
        const BigInt A = count_directed(jumps, 7 * n - 2, 4, 1, true);
        const BigInt B = count_directed(jumps, 7 * n - 2, 3, 0, true);
        const std::string tag = "n=" + std::to_string(n);
        out.push_back(detail::equality_check("A+B closed form " + tag, BigRational(A + B), BigRational(knuth_sum(n)),
                                             "dp", "closed_form"));
        const auto k = static_cast<std::size_t>(7 * n - 2);
        out.push_back(detail::equality_check("A kernel " + tag, BigRational(A), g1[k], "dp", "kernel"));
        out.push_back(detail::equality_check("B kernel " + tag, BigRational(B), f0[k], "dp", "kernel"));
    }
    return out;
}

/// Bizley exponential vs Grossman partition sum vs NE-path DP (k <= 4 for the DP).
inline std::vector<CheckResult> bizley_suite(std::int64_t a, std::int64_t b, std::int64_t max_k)
{
    slopewalk::detail::require(max_k >= 1, "bizley suite needs --max >= 1");
    slopewalk::detail::require(a >= 1 && b >= 1, "bizley suite needs positive a, b");
    std::vector<CheckResult> out;
    const auto series = bizley_series(a, b, static_cast<std::size_t>(max_k));
    for (std::int64_t k = 1; k <= max_k; ++k) {
        const std::string tag = "k=" + std::to_string(k);
        const BigInt g = grossman_sum(a, b, static_cast<std::size_t>(k));
        out.push_back(detail::equality_check("bizley=grossman " + tag, BigRational(series[k]), BigRational(g),
                                             "bizley", "grossman"));
        if (k <= 4) {
            const BigInt dp = count_ne_below(RationalSlope(a, 0, b, Boundary::Touch), {b * k, a * k});
            out.push_back(detail::equality_check("bizley=dp " + tag, BigRational(series[k]), BigRational(dp),
                                                 "bizley", "dp"));
        }
    }
    return out;
}

/// Lattice path integral closed form vs (1/c) sum_k |W_{k/c}| for s = S0 .. S0 + max.
inline std::vector<CheckResult> naka_suite(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t max_s)
{
    const StartingPointFamily f = starting_points(a, b, c);
    std::vector<CheckResult> out;
    for (std::int64_t s = f.s0; s <= f.s0 + max_s; ++s) {
        if (f.path_length(s) <= 0 || f.point(s).y < 1) continue;
        out.push_back(detail::equality_check("naka s=" + std::to_string(s), naka_integral(a, b, c, s),
                                             naka_integral_dp(a, b, c, s), "closed_form", "dp"));
        out.push_back(detail::equality_check("general_slope_sum s=" + std::to_string(s),
                                             BigRational(general_slope_sum(a, b, c, s)),
                                             BigRational(general_slope_sum_dp(a, b, c, s)), "closed_form", "dp"));
    }
    return out;
}

/// general_sum vs DP for every admissible (a, c, l) with a + c <= 10 and s <= max.
inline std::vector<CheckResult> general_suite(std::int64_t max_s)
{
    slopewalk::detail::require(max_s >= 1, "general suite needs --max >= 1");
    std::vector<CheckResult> out;
    for (std::int64_t a = 1; a < 10; ++a)
        for (std::int64_t c = a + 1; a + c <= 10; ++c) {
            if (std::gcd(a, c) != 1) continue;
            for (std::int64_t l = 0; (l + 1) * a < c; ++l)
                for (std::int64_t s = 1; s <= max_s; ++s) {
                    const std::string tag = "(a,c,l,s)=(" + std::to_string(a) + "," + std::to_string(c) + "," +
                                            std::to_string(l) + "," + std::to_string(s) + ")";
                    out.push_back(detail::equality_check("general_sum " + tag, BigRational(general_sum(a, c, l, s)),
                                                         BigRational(general_sum_dp(a, c, l, s)), "closed_form",
                                                         "dp"));
                }
        }
    return out;
}

inline std::vector<CheckResult> recurrence_suite(std::int64_t max_n)
{
    slopewalk::detail::require(max_n >= 1, "recurrence suite needs --max >= 1");
    std::vector<CheckResult> out;
    for (std::int64_t n = 1; n <= max_n; ++n) {
        CheckResult r{"C(n+1)/C(n) n=" + std::to_string(n), recurrence_check(n), Json::object()};
        if (!r.passed) {
            r.detail["ratio"] = BigRational(BigRational(knuth_sum(n + 1)) / BigRational(knuth_sum(n))).get_str();
            r.detail["predicted"] = knuth_recurrence_ratio(n).get_str();
        }
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<CheckResult> rotation_suite(std::int64_t a, std::int64_t c, const Precision& prec)
{
    WorkingPrecision wp(prec);
    const StructuralConstants s = structural_constants(a, c, prec);
    const Real tol = pow(Real(10), -static_cast<int>(prec.digits) + 20);
    const RotationReport rep = rotation_law_check(a, c, rotation_samples(s, 10), tol, prec);
    std::vector<CheckResult> out;
    for (std::size_t i = 0; i < rep.samples.size(); ++i) {
        const RotationSample& smp = rep.samples[i];
        CheckResult r{"sample " + std::to_string(i), smp.deviation < tol, Json::object()};
        r.detail["deviation"] = to_scientific(smp.deviation, 3);
        Json sigma = Json::array();
        for (auto j : smp.sigma) sigma.push_back(j + 1);
        r.detail["sigma"] = sigma;
        out.push_back(std::move(r));
    }
    CheckResult summary{"same permutation at all samples", rep.consistent_sigma, Json::object()};
    summary.detail["kappa"] = rep.kappa;
    summary.detail["max_deviation"] = to_scientific(rep.max_deviation, 3);
    out.push_back(std::move(summary));
    return out;
}

inline std::vector<CheckResult> tree_suite(std::int64_t order)
{
    slopewalk::detail::require(order >= 2, "tree suite needs --max >= 2");
    const auto n = static_cast<std::size_t>(order);
    std::vector<CheckResult> out;
    for (const BigRational& t : {BigRational(2), make_rational(5, 2), BigRational(3), make_rational(3, 2)})
        out.push_back({"log identity t=" + t.get_str(), log_tree_identity_check(t, n), Json::object()});
    out.push_back({"half-tree even part", half_tree_identity_check(n), Json::object()});
    return out;
}

/// meander_gf coefficients 0..max against the path DP for the tested slopes.
inline std::vector<CheckResult> kernel_suite(std::int64_t max_order)
{
    slopewalk::detail::require(max_order >= 1, "kernel suite needs --max >= 1");
    std::vector<CheckResult> out;
    const std::vector<std::pair<std::int64_t, std::int64_t>> models{{1, 1}, {1, 2}, {2, 3}, {2, 5}, {3, 5}};
    for (const auto& [a, c] : models) {
        const JumpPolynomial jumps = JumpPolynomial::two_jump(a, c);
        for (std::int64_t h = a; h <= a + 2; ++h)
            for (std::int64_t i = 0; i < a; ++i) {
                const TruncatedSeries f = meander_gf(a, c, h, i, static_cast<std::size_t>(max_order));
                CheckResult r{"(a,c,h,i)=(" + std::to_string(a) + "," + std::to_string(c) + "," + std::to_string(h) +
                                  "," + std::to_string(i) + ")",
                              true, Json::object()};
                for (std::int64_t n = 0; n <= max_order; ++n) {
                    const BigInt dp = count_directed(jumps, n, h, i, true);
                    if (f[static_cast<std::size_t>(n)] != BigRational(dp)) {
                        r.passed = false;
                        r.detail["n"] = n;
                        r.detail["kernel"] = f[static_cast<std::size_t>(n)].get_str();
                        r.detail["dp"] = dp.get_str();
                        break;
                    }
                }
                out.push_back(std::move(r));
            }
    }
    return out;
}

inline std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& o)
{
    if (name == "knuth") return knuth_suite(o.max);
    if (name == "bizley") return bizley_suite(o.a, o.b, o.max);
    if (name == "naka") return naka_suite(o.a, o.b, o.c, o.max);
    if (name == "general") return general_suite(o.max);
    if (name == "recurrence") return recurrence_suite(o.max);
    if (name == "rotation") return rotation_suite(o.a, o.c, o.precision);
    if (name == "tree") return tree_suite(o.max);
    if (name == "kernel") return kernel_suite(o.max);
    throw PreconditionError("unknown suite '" + name + "'");
}

} // namespace slopewalk::cli
