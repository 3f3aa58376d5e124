#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cstdlib>
#include <ios>
#include <mutex>
#include <string>

#include "slopewalk/errors.hpp"
#include "slopewalk/exactmath/rational.hpp"

namespace slopewalk {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

struct Precision {
    unsigned digits = 50;
    unsigned guard = 15;  // extra digits carried internally

    unsigned working_digits() const { return digits + guard; }
    Real tolerance() const { return boost::multiprecision::pow(Real(10), -static_cast<int>(digits) + 10); }

    /// Digits from SLOPEWALK_PRECISION when set, else `fallback`.
    static Precision from_env(unsigned fallback = 50)
    {
        Precision p;
        p.digits = fallback;
        if (const char* env = std::getenv("SLOPEWALK_PRECISION")) {
            try {
                const long v = std::stol(env);
                if (v >= 10 && v <= 2000) p.digits = static_cast<unsigned>(v);
            } catch (const std::exception&) {
            }
        }
        return p;
    }
};

/**
 * Scoped default precision for newly created Real values. The MPFR backend
 * keeps the default in a process-wide static, so scopes are serialized.
 */
class WorkingPrecision {
public:
    explicit WorkingPrecision(const Precision& p) : WorkingPrecision(p.working_digits()) {}

    explicit WorkingPrecision(unsigned digits) : lock_(mutex()), saved_(Real::default_precision())
    {
        Real::default_precision(digits);
    }

    ~WorkingPrecision() { Real::default_precision(saved_); }

    WorkingPrecision(const WorkingPrecision&) = delete;
    WorkingPrecision& operator=(const WorkingPrecision&) = delete;

private:
    static std::recursive_mutex& mutex()
    {
        static std::recursive_mutex m;
        return m;
    }

    std::unique_lock<std::recursive_mutex> lock_;
    unsigned saved_;
};

inline Real real_pi()
{
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

inline Real to_real(const BigRational& q)
{
    Real r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

inline Real to_real(const BigInt& z)
{
    Real r;
    mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

/// Fixed-point rendering with `decimals` digits after the point.
inline std::string to_fixed(const Real& x, unsigned decimals)
{
    return x.str(static_cast<std::streamsize>(decimals), std::ios_base::fixed);
}

/// Scientific rendering with `significant` digits.
inline std::string to_scientific(const Real& x, unsigned significant = 6)
{
    return x.str(static_cast<std::streamsize>(significant), std::ios_base::scientific);
}

// ---------------------------------------------------------------------------

struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(const Real& r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
    Complex(const Real& r, const Real& i) : re(r), im(i) {}

    static Complex polar(const Real& r, const Real& theta) { return {r * cos(theta), r * sin(theta)}; }

    Complex operator-() const { return {-re, -im}; }
    friend Complex operator+(const Complex& x, const Complex& y) { return {x.re + y.re, x.im + y.im}; }
    friend Complex operator-(const Complex& x, const Complex& y) { return {x.re - y.re, x.im - y.im}; }
    friend Complex operator*(const Complex& x, const Complex& y)
    {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend Complex operator/(const Complex& x, const Complex& y)
    {
        const Real d = y.re * y.re + y.im * y.im;
        return {(x.re * y.re + x.im * y.im) / d, (x.im * y.re - x.re * y.im) / d};
    }
    Complex& operator+=(const Complex& o) { return *this = *this + o; }
    Complex& operator-=(const Complex& o) { return *this = *this - o; }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }
    Complex& operator/=(const Complex& o) { return *this = *this / o; }

    friend Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
    friend Real abs(const Complex& z) { return sqrt(norm(z)); }
    friend Real arg(const Complex& z) { return atan2(z.im, z.re); }
    friend Complex conj(const Complex& z) { return {z.re, -z.im}; }
};

inline Complex pow(Complex base, long n)
{
    if (n < 0) return Complex(Real(1)) / pow(base, -n);
    Complex r(Real(1));
    while (n > 0) {
        if (n & 1) r *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return r;
}

/// exp(2 pi i k / n).
inline Complex root_of_unity(long k, long n)
{
    return Complex::polar(Real(1), 2 * real_pi() * Real(k) / Real(n));
}

/// Principal n-th root (argument in (-pi/n, pi/n]).
inline Complex principal_root(const Complex& z, long n)
{
    return Complex::polar(pow(abs(z), Real(1) / Real(n)), arg(z) / Real(n));
}

} // namespace slopewalk
