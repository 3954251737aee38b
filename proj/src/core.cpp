#include "betatet/core.hpp"

#include <cmath>
#include <string>

namespace betatet {

std::string_view to_string(Sentinel s) noexcept
{
    switch (s) {
    case Sentinel::Overflow:
        return "Overflow";
    case Sentinel::PoleHit:
        return "PoleHit";
    case Sentinel::NonConvergent:
        return "NonConvergent";
    }
    return "Unknown";
}

SentinelError::SentinelError(Sentinel s)
    : std::runtime_error(std::string(to_string(s))), sentinel_(s)
{
}

Checked checked(cplx v) noexcept
{
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        return Sentinel::Overflow;
    return v;
}

Checked operator+(const Checked& a, const Checked& b)
{
    if (!a) return a;
    if (!b) return b;
    return checked(*a + *b);
}

Checked operator-(const Checked& a, const Checked& b)
{
    if (!a) return a;
    if (!b) return b;
    return checked(*a - *b);
}

Checked operator*(const Checked& a, const Checked& b)
{
    if (!a) return a;
    if (!b) return b;
    return checked(*a * *b);
}

Checked operator/(const Checked& a, const Checked& b)
{
    if (!a) return a;
    if (!b) return b;
    if (*b == cplx(0.0, 0.0))
        return Sentinel::PoleHit;
    return checked(*a / *b);
}

Checked operator-(const Checked& a)
{
    if (!a) return a;
    return -*a;
}

Params::Params(cplx lambda_, cplx mu_) : lambda(lambda_), mu(mu_)
{
    if (!(lambda.real() > 0.0))
        throw std::invalid_argument("Re(lambda) must be positive");
    if (mu == cplx(0.0, 0.0))
        throw std::invalid_argument("mu must be non-zero");
}

Checked exp_b(cplx z, const Params& p) noexcept
{
    const cplx w = p.mu * z;
    if (!(w.real() <= kOverflowExponent))
        return Sentinel::Overflow;
    return checked(std::exp(w));
}

Checked exp_b(const Checked& z, const Params& p) noexcept
{
    if (!z) return z;
    return exp_b(*z, p);
}

Checked log_b(cplx z, const Params& p, BranchIndex branch) noexcept
{
    if (z == cplx(0.0, 0.0))
        return Sentinel::PoleHit;
    cplx l = std::log(z);
    if (branch.k != 0)
        l += cplx(0.0, 2.0 * kPi * static_cast<double>(branch.k));
    return checked(l / p.mu);
}

Checked log_b(const Checked& z, const Params& p, BranchIndex branch) noexcept
{
    if (!z) return z;
    return log_b(*z, p, branch);
}

cplx log1p_complex(cplx z) noexcept
{
    const double x = z.real();
    const double y = z.imag();
    if (std::abs(z) > 0.5)
        return std::log(cplx(1.0 + x, y));
    // |1+z|^2 - 1 = x(2+x) + y^2, formed without the leading 1.
    const double re = 0.5 * std::log1p(x * (2.0 + x) + y * y);
    const double im = std::atan2(y, 1.0 + x);
    return {re, im};
}

Checked log1p_b(cplx z, const Params& p) noexcept
{
    if (z == cplx(-1.0, 0.0))
        return Sentinel::PoleHit;
    return checked(log1p_complex(z) / p.mu);
}

Checked log1p_b(const Checked& z, const Params& p) noexcept
{
    if (!z) return z;
    return log1p_b(*z, p);
}

double odd_pi_distance(cplx v) noexcept
{
    // nearest (2k+1)*pi on the imaginary axis
    const double k = std::round((v.imag() / kPi - 1.0) / 2.0);
    const double target = (2.0 * k + 1.0) * kPi;
    return std::abs(cplx(v.real(), v.imag() - target));
}

}  // namespace betatet
