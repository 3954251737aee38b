#include "betatet/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace betatet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kBasinSteps = 200;
// Points this close to omega are the fixed point up to rounding of omega itself.
constexpr double kFixedPointTolerance = 64.0 * std::numeric_limits<double>::epsilon();
// Regular tetration is accurate to about 1e-11, so a pullback value this small
// is a zero of tet and the next log_b step is the pole.
constexpr double kTetZeroTolerance = 1e-9;

/// Truncated product of two series of equal length.
std::vector<cplx> series_mul(const std::vector<cplx>& a, const std::vector<cplx>& b)
{
    const std::size_t n = a.size();
    std::vector<cplx> c(n, cplx(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i <= k; ++i)
            c[k] += a[i] * b[k - i];
    return c;
}

/// Powers a^0 .. a^{n-1} of a series without constant term, truncated.
std::vector<std::vector<cplx>> series_powers(const std::vector<cplx>& a)
{
    const std::size_t n = a.size();
    std::vector<std::vector<cplx>> pw(n, std::vector<cplx>(n, cplx(0.0, 0.0)));
    pw[0][0] = 1.0;
    for (std::size_t j = 1; j < n; ++j)
        pw[j] = series_mul(pw[j - 1], a);
    return pw;
}

cplx horner(const std::vector<cplx>& c, cplx u)
{
    cplx acc(0.0, 0.0);
    for (std::size_t k = c.size(); k-- > 1;)
        acc = (acc + c[k]) * u;
    return acc;
}

std::vector<cplx> circle(cplx center, double radius, int count)
{
    std::vector<cplx> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j)
        pts.push_back(center + std::polar(radius, 2.0 * kPi * j / count));
    return pts;
}

}  // namespace

std::string_view to_string(Verdict v) noexcept
{
    switch (v) {
    case Verdict::Fatou: return "Fatou";
    case Verdict::Julia: return "Julia";
    case Verdict::Undecided: return "Undecided";
    }
    return "?";
}

int ClassifyConfig::window(const Params& p) const
{
    if (K > 0)
        return K;
    return std::max(2, static_cast<int>(std::ceil(80.0 / p.lambda.real())));
}

Classification classify_point(cplx s, const GSeries& gs, const ClassifyConfig& cfg)
{
    const Params& p = gs.params;
    const int K = cfg.window(p);
    if (!(cfg.delta > 0.0 && cfg.delta < cfg.D) || cfg.probes < 4)
        throw std::invalid_argument("classify_point needs 0 < delta < D and probes >= 4");

    Classification out;
    out.k_window = K;
    out.orbit_min = kInf;
    out.orbit_max = 0.0;

    std::vector<cplx> points{s};
    const auto ring = circle(s, cfg.probe_radius, cfg.probes);
    points.insert(points.end(), ring.begin(), ring.end());

    std::vector<cplx> last;
    bool julia = false;
    for (const cplx pt : points) {
        for (int k = K / 2; k <= K; ++k) {
            const Checked b = beta_eval(pt + static_cast<double>(k), gs);
            if (!b) {
                julia = true;
                out.orbit_max = kInf;
                break;
            }
            const double mod = std::abs(*b);
            out.orbit_min = std::min(out.orbit_min, mod);
            out.orbit_max = std::max(out.orbit_max, mod);
            const double h = 1.0 / mod;
            if (!(h > cfg.delta && h < cfg.D))
                julia = true;
            if (k == K)
                last.push_back(*b);
        }
        if (julia)
            break;
    }

    if (julia) {
        out.verdict = Verdict::Julia;
        return out;
    }
    double spread = 0.0;
    for (const cplx v : last)
        spread = std::max(spread, std::abs(v - last.front()));
    out.verdict = spread > 1e-3 * (1.0 + std::abs(last.front())) ? Verdict::Undecided
                                                                 : Verdict::Fatou;
    return out;
}

double a_mu_estimate(cplx s_center, double radius, const GSeries& gs, int K, int samples)
{
    if (samples < 8 || K < 1 || radius < 0.0)
        throw std::invalid_argument("a_mu_estimate needs samples >= 8, K >= 1, radius >= 0");
    const Params& p = gs.params;
    double worst = 0.0;
    for (const cplx pt : circle(s_center, radius, samples)) {
        for (int k = K / 2; k <= K; ++k) {
            const Checked b = beta_eval(pt + static_cast<double>(k), gs);
            if (!b || std::abs(*b) < 1e-300)
                return kInf;
            worst = std::max(worst, 1.0 / std::abs(p.mu * *b));
        }
    }
    return worst;
}

Guarded<FixedPointData> omega_fixed_point(const Params& p, int max_iter)
{
    if (max_iter < 1)
        throw std::invalid_argument("omega_fixed_point: max_iter must be positive");
    cplx z(0.0, 0.0);
    for (int it = 1; it <= max_iter; ++it) {
        const Checked next = exp_b(z, p);
        if (!next)
            return Sentinel::NonConvergent;
        const double step = std::abs(*next - z);
        z = *next;
        if (step < 1e-13) {
            for (int polish = 0; polish < 3; ++polish) {
                const cplx e = std::exp(p.mu * z);
                const cplx d = p.mu * e - 1.0;
                if (d == cplx(0.0, 0.0))
                    break;
                z -= (e - z) / d;
            }
            return FixedPointData{z, p.mu * z, it};
        }
    }
    return Sentinel::NonConvergent;
}

std::vector<cplx> schroeder_coefficients(const std::vector<cplx>& f)
{
    if (f.size() < 2 || f[0] != cplx(0.0, 0.0))
        throw std::invalid_argument("schroeder_coefficients: need f(0) = 0 and a linear term");
    const std::size_t n = f.size();
    const cplx gamma = f[1];
    const auto pw = series_powers(f);

    std::vector<cplx> phi(n, cplx(0.0, 0.0));
    phi[1] = 1.0;
    cplx gamma_k = gamma;
    for (std::size_t k = 2; k < n; ++k) {
        gamma_k *= gamma;
        const cplx denom = gamma - gamma_k;
        if (std::abs(denom) < 1e-300)
            throw std::invalid_argument("schroeder_coefficients: resonant multiplier");
        cplx acc(0.0, 0.0);
        for (std::size_t j = 1; j < k; ++j)
            acc += phi[j] * pw[j][k];
        phi[k] = acc / denom;
    }
    return phi;
}

std::vector<cplx> reverse_series(const std::vector<cplx>& a)
{
    if (a.size() < 2 || a[0] != cplx(0.0, 0.0) || a[1] == cplx(0.0, 0.0))
        throw std::invalid_argument("reverse_series: need a(0) = 0 and a'(0) != 0");
    const std::size_t n = a.size();
    std::vector<cplx> q(n, cplx(0.0, 0.0));
    q[1] = 1.0 / a[1];
    for (std::size_t k = 2; k < n; ++k) {
        // coefficient k of a(q(v)) with q_k still zero; q_k enters only via a_1 q_k
        std::vector<cplx> head(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(k) + 1);
        std::vector<cplx> power = head;
        cplx acc(0.0, 0.0);
        for (std::size_t j = 2; j <= k; ++j) {
            power = series_mul(power, head);
            acc += a[j] * power[k];
        }
        q[k] = -acc / a[1];
    }
    return q;
}

Guarded<KoenigsSeries> koenigs_series(const Params& p, int order)
{
    if (order < 2)
        throw std::invalid_argument("koenigs_series: order must be at least 2");
    const auto fp = omega_fixed_point(p);
    if (!fp)
        return Sentinel::NonConvergent;
    const cplx gamma = fp->multiplier;
    if (std::abs(gamma) >= 1.0 - 1e-9 || gamma == cplx(0.0, 0.0))
        return Sentinel::NonConvergent;

    // f(omega + u) - omega = omega (e^{mu u} - 1)
    std::vector<cplx> f(static_cast<std::size_t>(order) + 1, cplx(0.0, 0.0));
    cplx term = fp->omega;
    for (int k = 1; k <= order; ++k) {
        term *= p.mu / static_cast<double>(k);
        f[static_cast<std::size_t>(k)] = term;
    }

    KoenigsSeries ks;
    ks.params = p;
    ks.fp = *fp;
    ks.phi_coeffs = schroeder_coefficients(f);
    ks.phi_inv_coeffs = reverse_series(ks.phi_coeffs);
    ks.working_radius = kKoenigsWorkingFraction * 0.5 / std::abs(p.mu);
    return ks;
}

cplx koenigs_phi(cplx z, const KoenigsSeries& ks)
{
    return horner(ks.phi_coeffs, z - ks.fp.omega);
}

cplx koenigs_phi_inv(cplx v, const KoenigsSeries& ks)
{
    return ks.fp.omega + horner(ks.phi_inv_coeffs, v);
}

Checked abel_regular(cplx z, const KoenigsSeries& ks)
{
    const Params& p = ks.params;
    int n = 0;
    while (std::abs(z - ks.fp.omega) > ks.working_radius) {
        if (n == kBasinSteps)
            return Sentinel::NonConvergent;
        const Checked next = exp_b(z, p);
        if (!next)
            return Sentinel::NonConvergent;
        z = *next;
        ++n;
    }
    if (std::abs(z - ks.fp.omega) <= kFixedPointTolerance * std::max(1.0, std::abs(ks.fp.omega)))
        return Sentinel::PoleHit;
    const cplx phi = koenigs_phi(z, ks);
    if (phi == cplx(0.0, 0.0))
        return Sentinel::PoleHit;
    return checked(std::log(phi) / std::log(ks.fp.multiplier) - static_cast<double>(n));
}

Checked regular_tet_offset(const KoenigsSeries& ks)
{
    return -abel_regular(cplx(1.0, 0.0), ks);
}

Checked regular_tet(cplx s, const KoenigsSeries& ks, cplx s0_norm)
{
    const cplx log_gamma = std::log(ks.fp.multiplier);
    const cplx x = (s - s0_norm) * log_gamma;
    // |gamma^{s - s0 + n}| = e^{Re x + n Re log gamma}, and Re log gamma < 0
    const double limit = std::log(ks.working_radius);
    long n = 0;
    if (x.real() > limit)
        n = static_cast<long>(std::ceil((x.real() - limit) / -log_gamma.real()));
    if (n > 100000)
        return Sentinel::NonConvergent;
    Checked z = koenigs_phi_inv(std::exp(x + static_cast<double>(n) * log_gamma), ks);
    for (long i = 0; i < n && z; ++i)
        z = std::abs(*z) < kTetZeroTolerance ? Checked(Sentinel::PoleHit) : log_b(z, ks.params);
    return z;
}

ThetaValue theta_map(cplx s, const GSeries& gs, const KoenigsSeries& ks, int n_max, double tol)
{
    if (n_max < 2 || !(tol > 0.0))
        throw std::invalid_argument("theta_map needs n_max >= 2 and tol > 0");
    ThetaValue out;
    cplx previous{};
    for (int n = 1; n <= n_max; ++n) {
        const cplx t = s + static_cast<double>(n);
        const Checked b = beta_eval(t, gs);
        if (!b) {
            out.theta = b;
            out.n_used = n;
            return out;
        }
        const Checked a = abel_regular(*b, ks);
        if (!a) {
            out.theta = a;
            out.n_used = n;
            return out;
        }
        const cplx theta = *a - t;
        out.n_used = n;
        if (n > 1) {
            out.drift = std::abs(theta - previous);
            if (out.drift < tol) {
                out.theta = theta;
                return out;
            }
        }
        previous = theta;
    }
    out.theta = Sentinel::NonConvergent;
    return out;
}

ResidueCheck residue_check(const GSeries& gs, long k_index, double radius, int nodes)
{
    const Params& p = gs.params;
    const double spacing = std::min(1.0, std::abs(2.0 * kPi / p.lambda));
    if (!(radius > 0.0 && radius < spacing) || nodes < 64)
        throw std::invalid_argument("residue_check needs 0 < radius < lattice spacing and nodes >= 64");

    const cplx pole_offset = cplx(0.0, (2.0 * static_cast<double>(k_index) + 1.0) * kPi) / p.lambda;
    const cplx c = 1.0 + pole_offset;

    ResidueCheck out;
    const Checked inner = beta_eval(pole_offset, gs);
    const Checked lifted = exp_b(inner, p);
    if (!lifted) {
        out.integral = lifted;
        out.rel_err = kInf;
        return out;
    }
    out.expected = cplx(0.0, 2.0 * kPi) / p.lambda * *lifted;

    cplx sum(0.0, 0.0);
    for (int j = 0; j < nodes; ++j) {
        const cplx offset = std::polar(radius, 2.0 * kPi * j / nodes);
        const Checked b = beta_eval(c + offset, gs);
        if (!b) {
            out.integral = b;
            out.rel_err = kInf;
            return out;
        }
        sum += *b * offset;
    }
    // ds = i r e^{i theta} d theta, d theta = 2 pi / nodes
    const cplx integral = sum * cplx(0.0, 2.0 * kPi / nodes);
    out.integral = integral;
    out.rel_err = std::abs(integral - out.expected) / std::abs(out.expected);
    return out;
}

}  // namespace betatet
