#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "slopewalk/asymptotics.hpp"
#include "slopewalk/cli/verify.hpp"
#include "slopewalk/closed_forms.hpp"
#include "slopewalk/errors.hpp"
#include "slopewalk/kernel_series.hpp"
#include "slopewalk/lattice_enum.hpp"

namespace slopewalk::cli {

enum ExitCode : int {
    kOk = 0,
    kError = 1,
    kParseError = 2,
    kNoSolution = 3,
    kMismatch = 4,
    kRootFailure = 5,
};

struct OutputRecord {
    std::string command;
    Json parameters = Json::object();
    Json values = Json::object();
    std::string status = "ok";

    Json to_json() const
    {
        Json j;
        j["command"] = command;
        j["parameters"] = parameters;
        j["values"] = values;
        j["status"] = status;
        return j;
    }
};

namespace detail {

struct Fraction {
    std::int64_t num = 0, den = 1;
};

inline Fraction parse_fraction(const std::string& text)
{
    Fraction f;
    std::size_t used = 0;
    try {
        const auto slash = text.find('/');
        f.num = std::stoll(text.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? text.size() : slash)) throw std::invalid_argument(text);
        if (slash != std::string::npos) {
            const std::string d = text.substr(slash + 1);
            f.den = std::stoll(d, &used);
            if (used != d.size()) throw std::invalid_argument(text);
        }
    } catch (const std::exception&) {
        throw PreconditionError("expected a fraction p/q, got '" + text + "'");
    }
    if (f.den <= 0) throw PreconditionError("fraction denominator must be positive: '" + text + "'");
    return f;
}

inline BigRational parse_rational(const std::string& text)
{
    const Fraction f = parse_fraction(text);
    return make_rational(f.num, f.den);
}

inline Point parse_point(const std::string& text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw PreconditionError("expected x,y, got '" + text + "'");
    try {
        return {std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw PreconditionError("expected x,y, got '" + text + "'");
    }
}

// Values are emitted as strings so rationals stay exact ("p/q").
inline Json series_values(const TruncatedSeries& s)
{
    Json arr = Json::array();
    for (const auto& c : s.coefficients()) arr.push_back(c.get_str());
    return arr;
}

inline Json integer_values(const std::vector<BigInt>& v)
{
    Json arr = Json::array();
    for (const auto& c : v) arr.push_back(c.get_str());
    return arr;
}

inline void emit(std::ostream& out, const OutputRecord& rec, const std::string& format)
{
    if (format == "csv") {
        const Json& coeffs = rec.values.contains("coefficients") ? rec.values["coefficients"] : Json();
        if (coeffs.is_array()) {
            out << "index,value\n";
            for (std::size_t i = 0; i < coeffs.size(); ++i) out << i << ',' << coeffs[i].get<std::string>() << '\n';
            return;
        }
        out << "key,value\n";
        for (const auto& [k, v] : rec.values.items()) out << k << ',' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
        return;
    }
    out << rec.to_json().dump(2) << '\n';
}

inline Json real_value(const Real& x, unsigned digits) { return to_fixed(x, digits); }

} // namespace detail

// ---------------------------------------------------------------------------

struct CountArgs {
    std::string slope;  // "a/c"
    std::int64_t offset = 0;
    bool strict = false, touch = false;
    std::string end;    // "x,y"
    std::string jumps;
    std::int64_t length = -1;
    std::int64_t from = 0;
    std::optional<std::int64_t> to;
    bool meander = false;
    bool oracle_check = false;
    std::string format = "json";
};

inline OutputRecord cmd_count(const CountArgs& a)
{
    OutputRecord rec{"count"};
    const bool ne_mode = !a.slope.empty();
    if (ne_mode == !a.jumps.empty()) throw PreconditionError("count needs exactly one of --slope or --jumps");

    if (ne_mode) {
        if (a.end.empty()) throw PreconditionError("count --slope needs --end x,y");
        if (a.strict && a.touch) throw PreconditionError("--strict and --touch are exclusive");
        const auto f = detail::parse_fraction(a.slope);
        const Boundary bd = a.touch ? Boundary::Touch : Boundary::Strict;
        const RationalSlope slope(f.num, a.offset, f.den, bd);
        const Point end = detail::parse_point(a.end);
        rec.parameters["slope"] = a.slope;
        rec.parameters["offset"] = a.offset;
        rec.parameters["boundary"] = a.touch ? "touch" : "strict";
        rec.parameters["end"] = a.end;
        const BigInt n = count_ne_below(slope, end);
        rec.values["count"] = n.get_str();
        if (a.oracle_check) {
            // Weakly below y = (a/c) x through the origin, ending on the line: Bizley.
            const bool on_line = a.touch && slope.b() == 0 && end.x % slope.c() == 0 &&
                                 end.y * slope.c() == end.x * slope.a() && end.x > 0;
            if (on_line) {
                const std::int64_t k = end.x / slope.c();
                const BigInt closed = bizley_series(slope.a(), slope.c(), static_cast<std::size_t>(k))[k];
                rec.values["oracle"] = "bizley";
                rec.values["closed_form"] = closed.get_str();
                rec.status = closed == n ? "equal" : "unequal";
            } else {
                rec.values["oracle"] = "none";
            }
        }
        return rec;
    }

    if (a.length < 0) throw PreconditionError("count --jumps needs --len n");
    const JumpPolynomial jumps = JumpPolynomial::parse(a.jumps);
    rec.parameters["jumps"] = jumps.to_string();
    rec.parameters["len"] = a.length;
    rec.parameters["from"] = a.from;
    rec.parameters["to"] = a.to ? Json(*a.to) : Json("any");
    rec.parameters["meander"] = a.meander;
    BigRational value;
    if (jumps.has_integer_weights()) {
        value = BigRational(count_directed(jumps, a.length, a.from, a.to, a.meander));
    } else {
        value = weighted_count_directed(jumps, a.length, a.from, a.to, a.meander);
    }
    rec.values["count"] = value.get_str();
    if (a.oracle_check) {
        const std::int64_t down = jumps.small_root_count();
        const bool kernel_ok = jumps.is_two_jump() && a.meander && a.to && *a.to >= 0 && *a.to < down &&
                               a.from >= down && std::gcd(down, jumps.max_jump()) == 1;
        if (kernel_ok) {
            const TruncatedSeries f = meander_gf(down, jumps.max_jump(), a.from, *a.to, static_cast<std::size_t>(a.length));
            rec.values["oracle"] = "kernel";
            rec.values["closed_form"] = f[static_cast<std::size_t>(a.length)].get_str();
            rec.status = f[static_cast<std::size_t>(a.length)] == value ? "equal" : "unequal";
        } else {
            rec.values["oracle"] = "none";
        }
    }
    return rec;
}

struct SeriesArgs {
    std::string what;
    std::string slope = "2/5";
    std::int64_t order = 10;
    std::int64_t h = -1, i = 0;
    std::int64_t a = 2, b = 3;
    std::string t = "2", r = "1";
    std::string format = "json";
};

inline OutputRecord cmd_series(const SeriesArgs& s)
{
    OutputRecord rec{"series"};
    if (s.order < 0) throw PreconditionError("--order must be non-negative");
    const auto order = static_cast<std::size_t>(s.order);
    rec.parameters["what"] = s.what;
    rec.parameters["order"] = s.order;

    auto kernel_model = [&]() {
        const auto f = detail::parse_fraction(s.slope);
        rec.parameters["slope"] = s.slope;
        return std::pair<std::int64_t, std::int64_t>{f.num, f.den};
    };

    if (s.what == "F0" || s.what == "G1") {
        const auto [a, c] = kernel_model();
        if (a != 2 || c != 5) throw PreconditionError("F0 and G1 are the slope 2/5 series; use --what Fi otherwise");
        const auto fg = slope25_F0_G1(std::max<std::size_t>(order, 5));
        rec.values["coefficients"] = detail::series_values((s.what == "F0" ? fg.first : fg.second).truncate(order));
    } else if (s.what == "Fi") {
        const auto [a, c] = kernel_model();
        const std::int64_t h = s.h < 0 ? a : s.h;
        rec.parameters["h"] = h;
        rec.parameters["i"] = s.i;
        rec.values["coefficients"] = detail::series_values(meander_gf(a, c, h, s.i, order));
    } else if (s.what == "powersum") {
        const auto [a, c] = kernel_model();
        const std::int64_t h = s.h < 0 ? 1 : s.h;
        rec.parameters["h"] = h;
        rec.values["coefficients"] = detail::series_values(power_sum(h, a, c, order));
    } else if (s.what == "bizley") {
        rec.parameters["a"] = s.a;
        rec.parameters["b"] = s.b;
        rec.values["coefficients"] = detail::integer_values(bizley_series(s.a, s.b, std::max<std::size_t>(order, 1)));
        if (order == 0) rec.values["coefficients"] = Json::array({"1"});
    } else if (s.what == "tree") {
        rec.parameters["t"] = s.t;
        rec.parameters["r"] = s.r;
        rec.values["coefficients"] =
            detail::series_values(tree_series(detail::parse_rational(s.t), detail::parse_rational(s.r), order));
    } else {
        throw PreconditionError("unknown --what '" + s.what + "' (F0, G1, Fi, bizley, tree, powersum)");
    }
    return rec;
}

struct VerifyArgs {
    std::string suite;
    std::int64_t max = 6;
    std::optional<std::int64_t> a, b;
    std::string slope;
    std::int64_t offset = -1;
    unsigned digits = 50;
};

inline OutputRecord cmd_verify(const VerifyArgs& v)
{
    OutputRecord rec{"verify"};
    SuiteOptions o;
    o.max = v.max;
    o.precision.digits = v.digits;
    rec.parameters["suite"] = v.suite;
    rec.parameters["max"] = v.max;
    if (v.suite == "bizley") {
        o.a = v.a.value_or(2);
        o.b = v.b.value_or(3);
        rec.parameters["a"] = o.a;
        rec.parameters["b"] = o.b;
    } else if (v.suite == "naka" || v.suite == "rotation") {
        const auto f = detail::parse_fraction(v.slope.empty() ? std::string("2/5") : v.slope);
        o.a = f.num;
        o.c = f.den;
        o.b = v.offset >= 0 ? v.offset : f.num;
        rec.parameters["slope"] = std::to_string(o.a) + "/" + std::to_string(o.c);
        if (v.suite == "naka") rec.parameters["offset"] = o.b;
        else rec.parameters["digits"] = v.digits;
    }

    const std::vector<CheckResult> results = run_suite(v.suite, o);
    Json checks = Json::array();
    std::size_t failed = 0;
    for (const auto& r : results) {
        Json j;
        j["check"] = r.name;
        j["passed"] = r.passed;
        if (!r.detail.empty()) j["detail"] = r.detail;
        checks.push_back(std::move(j));
        if (!r.passed) ++failed;
    }
    rec.values["checks"] = std::move(checks);
    rec.values["total"] = results.size();
    rec.values["failed"] = failed;
    rec.status = failed == 0 ? "pass" : "fail";
    return rec;
}

struct AsymptoticsArgs {
    std::string slope = "2/5";
    unsigned digits = 50;
    bool area = false;
    std::int64_t convergence = 0;
};

inline OutputRecord cmd_asymptotics(const AsymptoticsArgs& x)
{
    OutputRecord rec{"asymptotics"};
    Precision prec;
    prec.digits = x.digits;
    WorkingPrecision wp(prec);
    const auto f = detail::parse_fraction(x.slope);
    rec.parameters["slope"] = x.slope;
    rec.parameters["digits"] = x.digits;
    const unsigned d = x.digits;

    if (x.area) {
        if (!(f.num == 2 && f.den == 3)) throw PreconditionError("--area is the Duchon model; use --slope 2/3");
        const std::int64_t max_n = x.convergence > 0 ? x.convergence : 2000;
        rec.parameters["convergence"] = max_n;
        const AreaConvergenceReport r = area_convergence_report(max_n, prec);
        rec.values["K"] = detail::real_value(r.K, d);
        Json rows = Json::array();
        for (const AreaRow& row : r.rows) {
            Json j;
            j["n"] = row.n;
            j["excursions"] = row.count.get_str();
            j["mean_area"] = row.mean_area.get_str();
            j["mean_area_over_n^1.5"] = to_fixed(row.directed_ratio, 12);
            j["sqrt5_mean_area_over_n^1.5"] = to_fixed(row.slope_ratio, 12);
            rows.push_back(std::move(j));
        }
        rec.values["table"] = std::move(rows);
        rec.values["extrapolated_K"] = to_fixed(r.extrapolated, 12);
        rec.values["fit_c1"] = to_fixed(r.c1, 12);
        rec.values["fit_c2"] = to_fixed(r.c2, 12);
        rec.values["relative_error"] = to_scientific(r.relative_error, 4);
        rec.values["directed_limit_K_over_sqrt5"] = detail::real_value(r.K / sqrt(Real(5)), d);
        rec.status = r.relative_error < Real(2) / 100 ? "ok" : "mismatch";
        return rec;
    }

    const StructuralConstants s = structural_constants(f.num, f.den, prec);
    const StructuralResiduals res = structural_residuals(s, prec);
    rec.values["tau"] = detail::real_value(s.tau, d);
    rec.values["rho"] = detail::real_value(s.rho, d);
    rec.values["period"] = s.period();
    rec.values["P'(tau)_residual"] = to_scientific(res.derivative, 4);
    rec.values["rho_P(tau)_residual"] = to_scientific(res.reciprocal, 4);

    if (f.num == 2 && f.den == 5) {
        const AsymptoticProfile k = knuth_constants(prec);
        rec.values["tau2"] = detail::real_value(k.tau2, d);
        rec.values["mu"] = detail::real_value(k.mu, d);
        rec.values["alpha1"] = detail::real_value(k.alpha1, d);
        rec.values["alpha2"] = detail::real_value(k.alpha2, d);
        rec.values["beta1"] = detail::real_value(k.beta1, d);
        rec.values["beta2"] = detail::real_value(k.beta2, d);
        rec.values["kappa1"] = detail::real_value(k.kappa1, d);
        rec.values["kappa2"] = detail::real_value(k.kappa2, d);
        rec.values["tau2_annihilator_residual"] = to_scientific(k.tau2_residual, 4);
        rec.values["kappa1_minpoly_residual"] = to_scientific(k.kappa1_residual, 4);
        rec.values["kappa2_minpoly_residual"] = to_scientific(k.kappa2_residual, 4);
        rec.values["kappa2_relation_residual"] = to_scientific(k.kappa2_relation, 4);
        if (x.convergence > 0) {
            if (x.convergence > 300) throw PreconditionError("--convergence for 2/5 is limited to n <= 300");
            rec.parameters["convergence"] = x.convergence;
            const JumpPolynomial jumps = JumpPolynomial::two_jump(2, 5);
            Json rows = Json::array();
            for (std::int64_t n = 10; n <= x.convergence; n += 10) {
                const BigInt A = count_directed(jumps, 7 * n - 2, 4, 1, true);
                const BigInt B = count_directed(jumps, 7 * n - 2, 3, 0, true);
                const ABEstimate e = an_bn_asymptotic(n, k);
                const Real ratio = to_real(A) / to_real(B);
                Json j;
                j["n"] = n;
                j["A_rel_error"] = to_scientific(abs(e.A / to_real(A) - 1), 4);
                j["B_rel_error"] = to_scientific(abs(e.B / to_real(B) - 1), 4);
                j["ratio"] = to_fixed(ratio, 15);
                j["ratio_minus_prediction"] = to_scientific(ratio - (k.kappa1 - k.kappa2 / Real(n)), 4);
                rows.push_back(std::move(j));
            }
            rec.values["table"] = std::move(rows);
        }
    }
    return rec;
}

// ---------------------------------------------------------------------------

/// Runs the command line `args` (without the program name). Returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact enumeration of lattice paths below rational slopes", "slopewalk"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    unsigned default_digits = Precision::from_env().digits;

    CountArgs ca;
    auto* count = app.add_subcommand("count", "Exact path counts");
    count->add_option("--slope", ca.slope, "Slope a/c of the boundary y = (a x + b)/c");
    count->add_option("--offset", ca.offset, "Offset b");
    count->add_flag("--strict", ca.strict, "Strictly below the line (default)");
    count->add_flag("--touch", ca.touch, "Touching the line allowed");
    count->add_option("--end", ca.end, "Endpoint x,y");
    count->add_option("--jumps", ca.jumps, "Jump set, e.g. -2,+5 or 3*-1,+1");
    count->add_option("--len", ca.length, "Number of jumps");
    count->add_option("--from", ca.from, "Start altitude");
    count->add_option("--to", ca.to, "End altitude (omit for any)");
    count->add_flag("--meander", ca.meander, "Stay at altitude >= 0");
    count->add_flag("--oracle-check", ca.oracle_check, "Compare with a matching closed form");
    count->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    SeriesArgs sa;
    auto* series = app.add_subcommand("series", "Generating function coefficients");
    series->add_option("--what", sa.what, "F0, G1, Fi, bizley, tree or powersum")->required();
    series->add_option("--slope", sa.slope, "Kernel model a/c");
    series->add_option("--order", sa.order, "Highest coefficient index");
    series->add_option("--from", sa.h, "Start altitude (Fi)");
    series->add_option("--to", sa.i, "End altitude (Fi)");
    series->add_option("--power", sa.h, "Power h (powersum)");
    series->add_option("--a", sa.a, "Bizley a");
    series->add_option("--b", sa.b, "Bizley b");
    series->add_option("--t", sa.t, "Tree parameter t");
    series->add_option("--r", sa.r, "Tree exponent r");
    series->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    VerifyArgs va;
    va.digits = default_digits;
    auto* verify = app.add_subcommand("verify", "Identity verification suites");
    verify->add_option("--suite", va.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--max", va.max, "Suite size parameter");
    verify->add_option("--a", va.a, "Bizley a");
    verify->add_option("--b", va.b, "Bizley b");
    verify->add_option("--slope", va.slope, "Slope a/c (naka, rotation)");
    verify->add_option("--offset", va.offset, "Offset b (naka; default a)");
    verify->add_option("--digits", va.digits, "Working precision (rotation)");
    verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    AsymptoticsArgs xa;
    xa.digits = default_digits;
    auto* asym = app.add_subcommand("asymptotics", "Structural and asymptotic constants");
    asym->add_option("--slope", xa.slope, "Model a/c");
    asym->add_option("--digits", xa.digits, "Decimal digits")->check(CLI::Range(10U, 2000U));
    asym->add_flag("--area", xa.area, "Duchon area convergence (slope 2/3)");
    asym->add_option("--convergence", xa.convergence, "Largest n for the convergence table");
    asym->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }

    try {
        OutputRecord rec;
        if (count->parsed()) rec = cmd_count(ca);
        else if (series->parsed()) rec = cmd_series(sa);
        else if (verify->parsed()) rec = cmd_verify(va);
        else rec = cmd_asymptotics(xa);
        std::ostringstream buffer;
        detail::emit(buffer, rec, format);
        out << buffer.str();
        if (rec.status == "unequal" || rec.status == "fail" || rec.status == "mismatch") return kMismatch;
        return kOk;
    } catch (const NoSolution& e) {
        err << "no solution: " << e.what() << '\n';
        return kNoSolution;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const RootFinderError& e) {
        err << "root finder: " << e.what() << '\n';
        return kRootFailure;
    } catch (const ConsistencyError& e) {
        err << "consistency: " << e.what() << '\n';
        return kMismatch;
    } catch (const IntegralityError& e) {
        err << "integrality: " << e.what() << '\n';
        return kMismatch;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }
}

} // namespace slopewalk::cli
