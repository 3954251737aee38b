#include "betatet/jet.hpp"

#include "textio.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace betatet {

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

int common_order(const Jet& a, const Jet& b) { return std::min(a.order(), b.order()); }

/// Coefficients 1..m of log(u) given L0 = log(u_0): from u L' = u'.
Jet log_tail(const Jet& u, cplx L0)
{
    const int m = u.order();
    std::vector<cplx> L(static_cast<std::size_t>(m) + 1);
    L[0] = L0;
    const cplx u0 = u[0];
    for (int k = 1; k <= m; ++k) {
        cplx acc(0.0, 0.0);
        for (int i = 1; i < k; ++i)
            acc += static_cast<double>(k - i) * L[k - i] * u[i];
        L[k] = (u[k] - acc / static_cast<double>(k)) / u0;
    }
    return Jet(u.center(), std::move(L));
}

}  // namespace

Jet finish(Jet j)
{
    if (j.poison_)
        return j;
    if (!std::all_of(j.coeffs_.begin(), j.coeffs_.end(), finite))
        return Jet(Sentinel::Overflow, j.center_, j.order());
    return j;
}

Jet::Jet(cplx center, std::vector<cplx> coeffs) : center_(center), coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw std::invalid_argument("Jet needs at least the constant coefficient");
}

Jet::Jet(Sentinel s, cplx center, int order)
    : center_(center), coeffs_(static_cast<std::size_t>(std::max(order, 0)) + 1), poison_(s)
{
}

Jet Jet::constant(cplx center, int order, cplx value)
{
    std::vector<cplx> c(static_cast<std::size_t>(order) + 1);
    c[0] = value;
    return Jet(center, std::move(c));
}

Jet Jet::variable(cplx center, int order)
{
    std::vector<cplx> c(static_cast<std::size_t>(order) + 1);
    c[0] = center;
    if (order >= 1)
        c[1] = 1.0;
    return Jet(center, std::move(c));
}

Sentinel Jet::sentinel() const
{
    if (!poison_)
        throw std::logic_error("Jet::sentinel on a healthy jet");
    return *poison_;
}

Checked Jet::value() const
{
    if (poison_)
        return *poison_;
    return coeffs_[0];
}

Jet Jet::truncated(int order) const
{
    if (order < 0 || order > this->order())
        throw std::invalid_argument("Jet::truncated: order out of range");
    if (poison_)
        return Jet(*poison_, center_, order);
    return Jet(center_, std::vector<cplx>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

Jet operator+(const Jet& a, const Jet& b)
{
    if (!a) return a;
    if (!b) return b;
    const int m = common_order(a, b);
    std::vector<cplx> c(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k)
        c[k] = a[k] + b[k];
    return finish(Jet(a.center(), std::move(c)));
}

Jet operator-(const Jet& a, const Jet& b)
{
    if (!a) return a;
    if (!b) return b;
    const int m = common_order(a, b);
    std::vector<cplx> c(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k)
        c[k] = a[k] - b[k];
    return finish(Jet(a.center(), std::move(c)));
}

Jet operator*(const Jet& a, const Jet& b)
{
    if (!a) return a;
    if (!b) return b;
    const int m = common_order(a, b);
    std::vector<cplx> c(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
        cplx acc(0.0, 0.0);
        for (int i = 0; i <= k; ++i)
            acc += a[i] * b[k - i];
        c[k] = acc;
    }
    return finish(Jet(a.center(), std::move(c)));
}

Jet operator/(const Jet& a, const Jet& b)
{
    if (!a) return a;
    if (!b) return b;
    const int m = common_order(a, b);
    if (b[0] == cplx(0.0, 0.0))
        return Jet(Sentinel::PoleHit, a.center(), m);
    std::vector<cplx> q(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
        cplx acc = a[k];
        for (int i = 1; i <= k; ++i)
            acc -= b[i] * q[k - i];
        q[k] = acc / b[0];
    }
    return finish(Jet(a.center(), std::move(q)));
}

Jet operator-(const Jet& a)
{
    if (!a) return a;
    std::vector<cplx> c(a.coeffs());
    for (auto& x : c)
        x = -x;
    return Jet(a.center(), std::move(c));
}

Jet operator+(const Jet& a, cplx b)
{
    if (!a) return a;
    std::vector<cplx> c(a.coeffs());
    c[0] += b;
    return finish(Jet(a.center(), std::move(c)));
}

Jet operator*(const Jet& a, cplx b)
{
    if (!a) return a;
    std::vector<cplx> c(a.coeffs());
    for (auto& x : c)
        x *= b;
    return finish(Jet(a.center(), std::move(c)));
}

Jet exp(const Jet& g)
{
    if (!g) return g;
    const int m = g.order();
    std::vector<cplx> e(static_cast<std::size_t>(m) + 1);
    e[0] = std::exp(g[0]);
    for (int k = 1; k <= m; ++k) {
        cplx acc(0.0, 0.0);
        for (int j = 1; j <= k; ++j)
            acc += static_cast<double>(j) * g[j] * e[k - j];
        e[k] = acc / static_cast<double>(k);
    }
    return finish(Jet(g.center(), std::move(e)));
}

Jet log(const Jet& g)
{
    if (!g) return g;
    if (g[0] == cplx(0.0, 0.0))
        return Jet(Sentinel::PoleHit, g.center(), g.order());
    return finish(log_tail(g, std::log(g[0])));
}

Jet log1p(const Jet& g)
{
    if (!g) return g;
    if (g[0] == cplx(-1.0, 0.0))
        return Jet(Sentinel::PoleHit, g.center(), g.order());
    return finish(log_tail(g + cplx(1.0, 0.0), log1p_complex(g[0])));
}

Jet exp_b(const Jet& z, const Params& p)
{
    if (!z) return z;
    if (!((p.mu * z[0]).real() <= kOverflowExponent))
        return Jet(Sentinel::Overflow, z.center(), z.order());
    return exp(z * p.mu);
}

Jet log_b(const Jet& z, const Params& p)
{
    return log(z) * (1.0 / p.mu);
}

Jet log1p_b(const Jet& z, const Params& p)
{
    return log1p(z) * (1.0 / p.mu);
}

void write_jet(std::ostream& os, const Jet& j)
{
    if (!j)
        throw SentinelError(j.sentinel());
    os << textio::complex_field("center", j.center()) << " m=" << j.order() << '\n';
    textio::write_coefficient_lines(os, j.coeffs());
}

Jet read_jet(std::istream& is)
{
    std::string header;
    if (!std::getline(is, header))
        throw std::runtime_error("empty jet file");
    std::istringstream hs(header);
    std::string center_tok, m_tok;
    hs >> center_tok >> m_tok;
    const cplx center = textio::parse_complex_field(center_tok, "center");
    const long m = textio::parse_int_field(m_tok, "m");
    if (m < 0)
        throw std::runtime_error("jet order must be non-negative");
    return Jet(center, textio::read_coefficient_lines(is, static_cast<std::size_t>(m) + 1));
}

}  // namespace betatet
