#pragma once

// Independent reference computations. None of these call into the library's
// evaluators; they restate the defining formulas as plainly as possible.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using cplxl = std::complex<long double>;

inline constexpr double kPi = 3.14159265358979323846;
inline const double kHalfLn2 = std::log(2.0) / 2.0;

/// Fixed seed for every property test, so failures reproduce.
inline std::mt19937_64 rng(std::uint64_t salt = 0)
{
    return std::mt19937_64(0x5eedbe7a5eedULL ^ salt);
}

/// q_1(s, q_2(s, ... q_n(s, z0))) by a plain loop, no truncation logic.
inline cplx nested(const std::function<cplx(long, cplx, cplx)>& q, cplx s, cplx z0, long n)
{
    cplx z = z0;
    for (long j = n; j >= 1; --j)
        z = q(j, s, z);
    return z;
}

/// beta by the defining nested composition with a fixed number of terms.
inline cplx beta_nested(cplx s, cplx lambda, cplx mu, long terms = 200)
{
    cplx z(0.0, 0.0);
    for (long j = terms; j >= 1; --j)
        z = std::exp(mu * z) / (1.0 + std::exp(lambda * (static_cast<double>(j) - s)));
    return z;
}

/// ln(1 + z) / mu evaluated in long double.
inline cplx log1p_extended(cplx z, cplx mu)
{
    const long double x = z.real(), y = z.imag();
    const long double re = 0.5L * std::log1p(2.0L * x + x * x + y * y);
    const long double im = std::atan2(y, 1.0L + x);
    return cplx(static_cast<double>(re), static_cast<double>(im)) / mu;
}

/// tau^n(s) = log_b^{o n}(beta(s + n)) - beta(s), principal logs throughout.
inline cplx tau_iterated_log(cplx s, cplx mu, int n, const std::function<cplx(cplx)>& beta)
{
    cplx z = beta(s + static_cast<double>(n));
    for (int i = 0; i < n; ++i)
        z = std::log(z) / mu;
    return z - beta(s);
}

/// The linearised recursion t^{n+1}(s) = t^n(s+1) / (mu beta(s+1)) - e^{-lambda s} / mu.
inline cplx tau_linearised(cplx s, cplx lambda, cplx mu, int n, const std::function<cplx(cplx)>& beta)
{
    if (n == 0)
        return 0.0;
    const cplx inner = tau_linearised(s + 1.0, lambda, mu, n - 1, beta);
    return inner / (mu * beta(s + 1.0)) - std::exp(-lambda * s) / mu;
}

/// Central difference derivative.
inline cplx central_difference(const std::function<cplx(cplx)>& f, cplx s, double h)
{
    return (f(s + h) - f(s - h)) / (2.0 * h);
}

/// Hue in [0, 1) of an RGB triple, the inverse of the HSV construction.
inline double hue_of(int r, int g, int b)
{
    const int mx = std::max({r, g, b}), mn = std::min({r, g, b});
    if (mx == mn)
        return 0.0;
    const double d = mx - mn;
    double h;
    if (mx == r)
        h = (g - b) / d;
    else if (mx == g)
        h = 2.0 + (b - r) / d;
    else
        h = 4.0 + (r - g) / d;
    h /= 6.0;
    return h < 0.0 ? h + 1.0 : h;
}

/// Circular distance between two hues in [0, 1).
inline double hue_distance(double a, double b)
{
    const double d = std::fabs(a - b);
    return std::min(d, 1.0 - d);
}

}  // namespace oracle
