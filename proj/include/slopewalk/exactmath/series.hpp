#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "slopewalk/errors.hpp"
#include "slopewalk/exactmath/binomial.hpp"
#include "slopewalk/exactmath/rational.hpp"

namespace slopewalk {

/**
 * Formal power series with exact rational coefficients, known modulo
 * z^(order+1).
 *
 * Coefficients 0..order are stored and trusted; nothing beyond is. Binary
 * operations return a series whose order is the minimum of the operands'
 * orders, so a short operand can never leak untrusted tail terms into a
 * longer result.
 */
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order = 0) : coeffs_(order + 1) {}

    explicit TruncatedSeries(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) coeffs_.resize(1);
    }

    static TruncatedSeries constant(const BigRational& value, std::size_t order)
    {
        TruncatedSeries s(order);
        s.coeffs_[0] = value;
        return s;
    }

    static TruncatedSeries monomial(const BigRational& coeff, std::size_t exponent, std::size_t order)
    {
        TruncatedSeries s(order);
        if (exponent <= order) s.coeffs_[exponent] = coeff;
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }

    const BigRational& operator[](std::size_t n) const
    {
        if (n > order()) throw PreconditionError("series coefficient beyond truncation order");
        return coeffs_[n];
    }

    std::span<const BigRational> coefficients() const { return coeffs_; }

    // Lowest exponent with a nonzero coefficient, or order()+1 for zero.
    std::size_t valuation() const
    {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return i;
        return coeffs_.size();
    }

    bool is_zero() const { return valuation() > order(); }

    TruncatedSeries truncate(std::size_t order) const
    {
        if (order > this->order()) throw PreconditionError("cannot extend a truncated series");
        return TruncatedSeries(std::vector<BigRational>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    TruncatedSeries operator-() const
    {
        TruncatedSeries r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& x, const TruncatedSeries& y)
    {
        TruncatedSeries r(std::min(x.order(), y.order()));
        for (std::size_t i = 0; i <= r.order(); ++i) r.coeffs_[i] = x.coeffs_[i] + y.coeffs_[i];
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& x, const TruncatedSeries& y)
    {
        TruncatedSeries r(std::min(x.order(), y.order()));
        for (std::size_t i = 0; i <= r.order(); ++i) r.coeffs_[i] = x.coeffs_[i] - y.coeffs_[i];
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y)
    {
        const std::size_t n = std::min(x.order(), y.order());
        const std::size_t vx = x.valuation(), vy = y.valuation();
        TruncatedSeries r(n);
        if (vx + vy > n) return r;
        BigRational term;
        for (std::size_t i = vx; i + vy <= n; ++i) {
            if (x.coeffs_[i] == 0) continue;
            for (std::size_t j = vy; i + j <= n; ++j) {
                if (y.coeffs_[j] == 0) continue;
                mpq_mul(term.get_mpq_t(), x.coeffs_[i].get_mpq_t(), y.coeffs_[j].get_mpq_t());
                r.coeffs_[i + j] += term;
            }
        }
        return r;
    }

    friend TruncatedSeries operator*(const BigRational& k, const TruncatedSeries& x)
    {
        TruncatedSeries r(x);
        for (auto& c : r.coeffs_) c *= k;
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& x, const BigRational& k) { return k * x; }

    friend TruncatedSeries operator/(const TruncatedSeries& x, const TruncatedSeries& y)
    {
        return x * y.inverse();
    }

    friend bool operator==(const TruncatedSeries& x, const TruncatedSeries& y)
    {
        return x.coeffs_ == y.coeffs_;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    /// Multiplicative inverse; the constant term must be nonzero.
    TruncatedSeries inverse() const
    {
        if (coeffs_[0] == 0) throw PreconditionError("series inverse needs an invertible constant term");
        TruncatedSeries r(order());
        const BigRational inv0 = 1 / coeffs_[0];
        r.coeffs_[0] = inv0;
        for (std::size_t n = 1; n <= order(); ++n) {
            BigRational acc;
            for (std::size_t k = 1; k <= n; ++k)
                if (coeffs_[k] != 0) acc += coeffs_[k] * r.coeffs_[n - k];
            r.coeffs_[n] = -acc * inv0;
        }
        return r;
    }

    TruncatedSeries derivative() const
    {
        if (order() == 0) return TruncatedSeries(0);
        TruncatedSeries r(order() - 1);
        for (std::size_t i = 1; i <= order(); ++i)
            r.coeffs_[i - 1] = coeffs_[i] * BigRational(static_cast<unsigned long>(i));
        return r;
    }

    /// exp(f) for f with zero constant term: n g_n = sum_k k f_k g_{n-k}.
    TruncatedSeries exp() const
    {
        if (coeffs_[0] != 0) throw PreconditionError("series exp needs a zero constant term");
        TruncatedSeries g(order());
        g.coeffs_[0] = 1;
        for (std::size_t n = 1; n <= order(); ++n) {
            BigRational acc;
            for (std::size_t k = 1; k <= n; ++k)
                if (coeffs_[k] != 0) acc += BigRational(static_cast<unsigned long>(k)) * coeffs_[k] * g.coeffs_[n - k];
            g.coeffs_[n] = acc / BigRational(static_cast<unsigned long>(n));
        }
        return g;
    }

    /// log(g) for g with constant term 1.
    TruncatedSeries log() const
    {
        if (coeffs_[0] != 1) throw PreconditionError("series log needs constant term 1");
        TruncatedSeries f(order());
        for (std::size_t n = 1; n <= order(); ++n) {
            BigRational acc = BigRational(static_cast<unsigned long>(n)) * coeffs_[n];
            for (std::size_t k = 1; k < n; ++k)
                if (f.coeffs_[k] != 0) acc -= BigRational(static_cast<unsigned long>(k)) * f.coeffs_[k] * coeffs_[n - k];
            f.coeffs_[n] = acc / BigRational(static_cast<unsigned long>(n));
        }
        return f;
    }

    /// g^r for rational r and constant term 1 (J.C.P. Miller recurrence).
    TruncatedSeries pow(const BigRational& r) const
    {
        if (coeffs_[0] != 1) throw PreconditionError("rational series power needs constant term 1");
        TruncatedSeries h(order());
        h.coeffs_[0] = 1;
        for (std::size_t n = 1; n <= order(); ++n) {
            BigRational acc;
            for (std::size_t k = 1; k <= n; ++k) {
                if (coeffs_[k] == 0) continue;
                const BigRational weight = (r + 1) * BigRational(static_cast<unsigned long>(k)) -
                                           BigRational(static_cast<unsigned long>(n));
                acc += weight * coeffs_[k] * h.coeffs_[n - k];
            }
            h.coeffs_[n] = acc / BigRational(static_cast<unsigned long>(n));
        }
        return h;
    }

    TruncatedSeries pow(unsigned long n) const
    {
        TruncatedSeries result = constant(1, order());
        TruncatedSeries base = *this;
        while (n > 0) {
            if (n & 1UL) result *= base;
            n >>= 1;
            if (n > 0) base *= base;
        }
        return result;
    }

    // f(k z).
    TruncatedSeries scale_argument(const BigRational& k) const
    {
        TruncatedSeries r(*this);
        BigRational power = 1;
        for (auto& c : r.coeffs_) {
            c *= power;
            power *= k;
        }
        return r;
    }

    // f(z^k), known modulo z^(k(order+1)).
    TruncatedSeries substitute_power(std::size_t k) const
    {
        if (k == 0) throw PreconditionError("substitute_power needs k >= 1");
        TruncatedSeries r(k * (order() + 1) - 1);
        for (std::size_t i = 0; i <= order(); ++i) r.coeffs_[i * k] = coeffs_[i];
        return r;
    }

    // f / z^m; the first m coefficients must vanish.
    TruncatedSeries shift_down(std::size_t m) const
    {
        if (m > order()) throw PreconditionError("shift_down beyond truncation order");
        for (std::size_t i = 0; i < m; ++i)
            if (coeffs_[i] != 0) throw ConsistencyError("shift_down of a series with a nonzero low coefficient");
        return TruncatedSeries(std::vector<BigRational>(coeffs_.begin() + m, coeffs_.end()));
    }

    // z^m f.
    TruncatedSeries shift_up(std::size_t m) const
    {
        std::vector<BigRational> c(m);
        c.insert(c.end(), coeffs_.begin(), coeffs_.end());
        return TruncatedSeries(std::move(c));
    }

    friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s)
    {
        os << '[';
        for (std::size_t i = 0; i <= s.order(); ++i) os << (i ? ", " : "") << s.coeffs_[i].get_str();
        return os << " | O(z^" << s.order() + 1 << ")]";
    }

private:
    std::vector<BigRational> coeffs_;
};

/**
 * (1 + f)^r expanded as sum_k gen_binomial(r, k) f^k, for f with zero
 * constant term. Only k <= order / valuation(f) terms can contribute.
 */
inline TruncatedSeries binomial_series(const TruncatedSeries& f, const BigRational& r)
{
    if (f[0] != 0) throw PreconditionError("binomial_series needs f(0) = 0");
    const std::size_t n = f.order();
    TruncatedSeries result = TruncatedSeries::constant(1, n);
    const std::size_t v = f.valuation();
    if (v > n) return result;
    TruncatedSeries power = TruncatedSeries::constant(1, n);
    for (std::size_t k = 1; k * v <= n; ++k) {
        power *= f;
        result += gen_binomial(r, k) * power;
    }
    return result;
}

} // namespace slopewalk
