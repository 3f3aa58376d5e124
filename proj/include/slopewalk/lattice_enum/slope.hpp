#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

#include "slopewalk/errors.hpp"
#include "slopewalk/exactmath/rational.hpp"

namespace slopewalk {

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend bool operator==(const Point&, const Point&) = default;
};

enum class Boundary { Strict, Touch };

/**
 * The line y = (a x + b) / c together with whether lattice points on it are
 * admissible. Construction divides out gcd(a, b, c).
 */
class RationalSlope {
public:
    RationalSlope(std::int64_t a, std::int64_t b, std::int64_t c, Boundary boundary = Boundary::Strict)
        : boundary_(boundary)
    {
        detail::require(a > 0, "slope numerator a must be positive");
        detail::require(b >= 0, "slope offset b must be non-negative");
        detail::require(c > 0, "slope denominator c must be positive");
        const std::int64_t g = std::gcd(std::gcd(a, b), c);
        a_ = a / g;
        b_ = b / g;
        c_ = c / g;
    }

    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    std::int64_t c() const { return c_; }
    Boundary boundary() const { return boundary_; }

    // Offset of the equivalent touch-allowed line: strictly below
    // y = (ax+b)/c is the same as touching-or-below y = (ax+b-1)/c.
    std::int64_t touch_offset() const { return boundary_ == Boundary::Strict ? b_ - 1 : b_; }

    // Signed gap c*(line - y) = a x + b - c y in units of 1/c.
    std::int64_t gap(Point p) const { return a_ * p.x + b_ - c_ * p.y; }

    bool admits(Point p) const { return c_ * p.y <= a_ * p.x + touch_offset(); }

    friend bool operator==(const RationalSlope&, const RationalSlope&) = default;

private:
    std::int64_t a_ = 1, b_ = 0, c_ = 1;
    Boundary boundary_ = Boundary::Strict;
};

/**
 * Jump polynomial P(u) = sum_j w_j u^j as a sparse exponent -> weight map.
 * Weights are positive rationals; integer counts require integer weights.
 */
class JumpPolynomial {
public:
    JumpPolynomial() = default;

    explicit JumpPolynomial(std::map<std::int64_t, BigRational> weights) : weights_(std::move(weights))
    {
        detail::require(!weights_.empty(), "jump polynomial needs at least one jump");
        for (const auto& [j, w] : weights_) detail::require(w > 0, "jump weights must be positive");
    }

    // P(u) = u^{-down} + u^{up}.
    static JumpPolynomial two_jump(std::int64_t down, std::int64_t up)
    {
        detail::require(down > 0 && up > 0, "two_jump needs positive magnitudes");
        return JumpPolynomial({{-down, BigRational(1)}, {up, BigRational(1)}});
    }

    // Parses "-2,+5" (optionally "3*-2,+5" for a weight).
    static JumpPolynomial parse(const std::string& text)
    {
        std::map<std::int64_t, BigRational> w;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            BigRational weight = 1;
            if (auto star = item.find('*'); star != std::string::npos) {
                weight = BigRational(item.substr(0, star));
                weight.canonicalize();
                item = item.substr(star + 1);
            }
            std::size_t used = 0;
            std::int64_t jump = 0;
            try {
                jump = std::stoll(item, &used);
            } catch (const std::exception&) {
                throw PreconditionError("bad jump '" + item + "'");
            }
            if (used != item.size()) throw PreconditionError("bad jump '" + item + "'");
            w[jump] += weight;
        }
        return JumpPolynomial(std::move(w));
    }

    const std::map<std::int64_t, BigRational>& weights() const { return weights_; }
    std::int64_t min_jump() const { return weights_.begin()->first; }
    std::int64_t max_jump() const { return weights_.rbegin()->first; }

    // a := -(smallest exponent), the number of small kernel roots.
    std::int64_t small_root_count() const { return min_jump() < 0 ? -min_jump() : 0; }

    bool has_unit_weights() const
    {
        for (const auto& [j, w] : weights_)
            if (w != 1) return false;
        return true;
    }

    bool has_integer_weights() const
    {
        for (const auto& [j, w] : weights_)
            if (!is_integer(w)) return false;
        return true;
    }

    bool is_two_jump() const { return weights_.size() == 2 && min_jump() < 0 && max_jump() > 0 && has_unit_weights(); }

    // Period a + c of the support for P(u) = u^{-a} + u^{c}.
    std::int64_t period() const
    {
        detail::require(is_two_jump(), "period is defined for two unit jumps -a, +c");
        return max_jump() - min_jump();
    }

    std::string to_string() const
    {
        std::string out;
        for (const auto& [j, w] : weights_) {
            if (!out.empty()) out += ',';
            if (w != 1) out += w.get_str() + "*";
            out += (j > 0 ? "+" : "") + std::to_string(j);
        }
        return out;
    }

private:
    std::map<std::int64_t, BigRational> weights_;
};

} // namespace slopewalk
