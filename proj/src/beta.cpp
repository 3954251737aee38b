#include "betatet/beta.hpp"

#include "textio.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace betatet {

namespace {

/// Real coordinates (x, y) with s = x + y * period.
std::pair<double, double> lattice_coords(cplx s, const Params& p)
{
    const cplx period = p.period();
    const double y = s.imag() / period.imag();
    const double x = s.real() - y * period.real();
    return {x, y};
}

/// floor(v), except that values within a few ulps below an integer snap up.
long snapped_floor(double v)
{
    double f = std::floor(v);
    const double slack = 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(v));
    if (v - f > 1.0 - slack)
        f += 1.0;
    return static_cast<long>(f);
}

}  // namespace

long series_seed_steps(cplx s, const Params& p)
{
    const double excess = (p.lambda * s).real() - (p.lambda.real() - kSeriesMargin);
    if (excess < 0.0)
        return 0;
    long n = static_cast<long>(std::floor(excess / p.lambda.real())) + 1;
    while ((p.lambda * (s - static_cast<double>(n))).real() >= p.lambda.real() - kSeriesMargin)
        ++n;
    return n;
}

cplx fold_period(cplx s, const Params& p)
{
    const double m = std::round(lattice_coords(s, p).second);
    return m != 0.0 ? s - m * p.period() : s;
}

bool forward_step_singular(cplx t, const Params& p)
{
    return odd_pi_distance(-p.lambda * t) < kLatticeTolerance;
}

CompositionTerm beta_terms(const Params& p)
{
    CompositionTerm term;
    term.limit_A = {0.0, 0.0};
    term.eval = [p](long j, cplx s, cplx z) -> Checked {
        const cplx v = p.lambda * (static_cast<double>(j) - s);
        if (odd_pi_distance(v) < kLatticeTolerance)
            return Sentinel::PoleHit;
        const Checked num = exp_b(z, p);
        if (!num)
            return num;
        // divide by 1 + e^v without forming e^v when it would be huge
        if (v.real() > 0.0) {
            const cplx decay = std::exp(-v);
            return checked(*num * decay / (1.0 + decay));
        }
        return checked(*num / (1.0 + std::exp(v)));
    };
    return term;
}

Checked beta_compose(cplx s, const Params& p, double tol, long j_max)
{
    return inner_compose(beta_terms(p), s, cplx(0.0, 0.0), tol, j_max).value;
}

GSeries g_coefficients(const Params& p, int K)
{
    if (K < 1)
        throw std::invalid_argument("g_coefficients: K must be at least 1");

    GSeries gs;
    gs.params = p;
    gs.coeffs.assign(static_cast<std::size_t>(K) + 1, cplx(0.0, 0.0));
    auto& c = gs.coeffs;

    // E = e^{mu g}, built alongside c via k E_k = mu sum_j j c_j E_{k-j}.
    std::vector<cplx> E(static_cast<std::size_t>(K) + 1, cplx(0.0, 0.0));
    E[0] = 1.0;
    const cplx shrink = std::exp(-p.lambda);

    for (int k = 1; k <= K; ++k) {
        if (k >= 2) {
            const int m = k - 1;
            cplx acc(0.0, 0.0);
            for (int j = 1; j <= m; ++j)
                acc += static_cast<double>(j) * c[j] * E[m - j];
            E[m] = p.mu * acc / static_cast<double>(m);
        }
        // degree k of g(e^lambda w)(1 + w) = w e^{mu g(w)}:
        //   e^{lambda k} c_k + e^{lambda (k-1)} c_{k-1} = E_{k-1}
        c[k] = std::exp(-p.lambda * static_cast<double>(k)) * E[k - 1] - shrink * c[k - 1];
        if (!std::isfinite(c[k].real()) || !std::isfinite(c[k].imag()) || std::abs(c[k]) > 1e300)
            throw SentinelError(Sentinel::Overflow);
    }
    return gs;
}

Checked beta_series(cplx s, const GSeries& gs)
{
    const Params& p = gs.params;
    if ((p.lambda * s).real() > p.lambda.real() - kSeriesMargin + 1e-12)
        return Sentinel::NonConvergent;

    const cplx w = std::exp(p.lambda * s);
    cplx acc(0.0, 0.0);
    for (int k = gs.order(); k >= 1; --k)
        acc = (acc + gs.coeffs[k]) * w;
    return checked(acc);
}

Checked beta_eval(cplx s, const GSeries& gs)
{
    const Params& p = gs.params;
    s = fold_period(s, p);
    const long n = series_seed_steps(s, p);
    cplx t = s - static_cast<double>(n);
    Checked b = beta_series(t, gs);
    for (long i = 0; i < n && b; ++i, t += 1.0) {
        if (forward_step_singular(t, p))
            return Sentinel::PoleHit;
        b = exp_b(b, p) / checked(1.0 + std::exp(-p.lambda * t));
    }
    return b;
}

Checked beta_backward(cplx s, const GSeries& gs, int steps)
{
    if (steps < 1)
        throw std::invalid_argument("beta_backward: steps must be at least 1");
    const Params& p = gs.params;
    Checked b = beta_eval(s, gs);
    for (int i = 1; i <= steps && b; ++i) {
        const cplx t = s - static_cast<double>(i);
        if (forward_step_singular(t, p))
            return Sentinel::PoleHit;
        b = log_b(b, p) + log1p_b(std::exp(-p.lambda * t), p);
    }
    return b;
}

FundamentalCoords to_fundamental(cplx s, const Params& p)
{
    const auto [x, y] = lattice_coords(s, p);
    FundamentalCoords fc;
    fc.m_period = snapped_floor(y);
    fc.n_shift = snapped_floor(x);
    fc.s0 = s - static_cast<double>(fc.m_period) * p.period() - static_cast<double>(fc.n_shift);
    return fc;
}

void write_gseries(std::ostream& os, const GSeries& gs)
{
    os << textio::complex_field("lambda", gs.params.lambda) << ' '
       << textio::complex_field("mu", gs.params.mu) << " K=" << gs.order() << '\n';
    textio::write_coefficient_lines(os, gs.coeffs);
}

GSeries read_gseries(std::istream& is)
{
    std::string header;
    if (!std::getline(is, header))
        throw std::runtime_error("empty series file");
    std::istringstream hs(header);
    std::string lam_tok, mu_tok, k_tok;
    hs >> lam_tok >> mu_tok >> k_tok;
    const cplx lambda = textio::parse_complex_field(lam_tok, "lambda");
    const cplx mu = textio::parse_complex_field(mu_tok, "mu");
    const long K = textio::parse_int_field(k_tok, "K");
    if (K < 1)
        throw std::runtime_error("series order must be at least 1");

    GSeries gs;
    gs.params = Params(lambda, mu);
    gs.coeffs = textio::read_coefficient_lines(is, static_cast<std::size_t>(K) + 1);
    return gs;
}

}  // namespace betatet
