#include "betatet/abel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace betatet {

namespace {

// ---- value adaptors so one rho engine serves points and jets -------------

bool healthy(const Checked& v) { return v.ok(); }
bool healthy(const Jet& v) { return v.ok(); }
Sentinel failure_of(const Checked& v) { return v.sentinel(); }
Sentinel failure_of(const Jet& v) { return v.sentinel(); }
cplx head(const Checked& v) { return *v; }
cplx head(const Jet& v) { return v[0]; }

/// log_b(1 + x) with the cut guard of rho_step applied to the constant term.
template <typename V>
V guarded_log1p(const V& x, const Params& p)
{
    if (!healthy(x))
        return x;
    const cplx x0 = head(x);
    if (x0 != cplx(-1.0, 0.0) && std::abs(1.0 + x0) < kCutTolerance)
        return V(Sentinel::NonConvergent);
    return log1p_b(x, p);
}

template <>
Jet guarded_log1p(const Jet& x, const Params& p)
{
    if (!x)
        return x;
    const cplx x0 = x[0];
    if (x0 != cplx(-1.0, 0.0) && std::abs(1.0 + x0) < kCutTolerance)
        return Jet(Sentinel::NonConvergent, x.center(), x.order());
    return log1p_b(x, p);
}

template <typename V>
struct RhoRun {
    std::vector<V> rho;  // rho^1.. at column 0
    V tau = V(Sentinel::NonConvergent);
    V F = V(Sentinel::NonConvergent);
    bool converged = false;
    std::optional<Sentinel> failure;
};

/// |rho^j| < tol and each of the last (up to) three ratios is below one.
bool stopping_rule(const std::vector<cplx>& r, double tol)
{
    const std::size_t j = r.size();
    if (j == 0 || !(std::abs(r[j - 1]) < tol))
        return false;
    const std::size_t checks = std::min<std::size_t>(3, j - 1);
    for (std::size_t c = 0; c < checks; ++c) {
        const double num = std::abs(r[j - 1 - c]);
        const double den = std::abs(r[j - 2 - c]);
        if (num != 0.0 && !(num < den))
            return false;
    }
    return true;
}

/// The rho table R[l][i] = rho^l(t_i), F[l][i] = beta(t_i) + sum_{m<=l} R[m][i],
///   R[1][i] = -log_b(1 + e^{-lambda t_i}),
///   R[l][i] = log_b(1 + R[l-1][i+1] / F[l-2][i+1]),
/// filled by anti-diagonals d = l + i - 1 so that beta(t_d) is requested only
/// once level d + 1 at column 0 is actually needed.
///
/// Source supplies beta(i) and decay(i) = e^{-lambda t_i} as values of V.
template <typename V, typename Source>
RhoRun<V> run_rho(const Source& src, int n_max, double tol, const Params& p)
{
    RhoRun<V> run;
    std::vector<std::vector<V>> R(static_cast<std::size_t>(n_max) + 1);
    std::vector<std::vector<V>> F(static_cast<std::size_t>(n_max) + 1);
    std::vector<cplx> heads;

    auto fail = [&run](Sentinel s) {
        run.failure = s;
        return run;
    };

    const V b0 = src.beta(0);
    if (!healthy(b0))
        return fail(failure_of(b0));
    F[0].push_back(b0);
    run.F = b0;
    run.tau = b0 - b0;

    for (int d = 0; d < n_max; ++d) {
        if (d > 0) {
            const V b = src.beta(d);
            if (!healthy(b))
                return fail(failure_of(b));
            F[0].push_back(b);
        }
        for (int l = 1; l <= d + 1; ++l) {
            const int i = d + 1 - l;
            V r = (l == 1) ? -guarded_log1p(src.decay(i), p)
                           : guarded_log1p(R[l - 1][i + 1] / F[l - 2][i + 1], p);
            if (!healthy(r))
                return fail(failure_of(r));
            R[l].push_back(r);
            F[l].push_back(F[l - 1][i] + r);
        }
        const V& top = R[d + 1][0];
        run.rho.push_back(top);
        heads.push_back(head(top));
        run.F = F[d + 1][0];
        run.tau = run.F - b0;
        if (!healthy(run.F))
            return fail(failure_of(run.F));
        if (stopping_rule(heads, tol)) {
            run.converged = true;
            break;
        }
    }
    return run;
}

struct PointSource {
    cplx s;
    const GSeries* gs;

    Checked beta(int i) const { return beta_eval(s + static_cast<double>(i), *gs); }
    Checked decay(int i) const
    {
        const cplx t = s + static_cast<double>(i);
        if (forward_step_singular(t, gs->params))
            return Sentinel::PoleHit;
        return checked(std::exp(-gs->params.lambda * t));
    }
};

struct JetSource {
    cplx s;  // shifted centre
    cplx center;
    int m;
    const GSeries* gs;

    Jet beta(int i) const
    {
        const Jet b = beta_jet(s + static_cast<double>(i), m, *gs);
        return b ? Jet(center, b.coeffs()) : Jet(b.sentinel(), center, m);
    }
    Jet decay(int i) const
    {
        const cplx t = s + static_cast<double>(i);
        if (forward_step_singular(t, gs->params))
            return Jet(Sentinel::PoleHit, center, m);
        return exp_shift(-gs->params.lambda, t);
    }
    /// e^{a (t + h)} as a jet in h.
    Jet exp_shift(cplx a, cplx t) const
    {
        std::vector<cplx> c(static_cast<std::size_t>(m) + 1);
        c[0] = std::exp(a * t);
        for (int k = 1; k <= m; ++k)
            c[k] = c[k - 1] * a / static_cast<double>(k);
        return finish(Jet(center, std::move(c)));
    }
};

Checked pull_back(Checked F, int steps, const Params& p)
{
    for (int i = 0; i < steps && F; ++i)
        F = log_b(F, p);
    return F;
}

AbelResult to_result(const RhoRun<Checked>& run, cplx s, int k_shift, const GSeries& gs,
                     bool require_convergence)
{
    AbelResult out;
    out.n_used = static_cast<int>(run.rho.size());
    for (const auto& r : run.rho)
        out.rho_terms.push_back(*r);
    out.rho_tail = out.rho_terms.empty() ? 0.0 : std::abs(out.rho_terms.back());
    out.converged = run.converged;
    if (run.failure) {
        out.F = out.tau = *run.failure;
        out.converged = false;
        return out;
    }
    if (require_convergence && !run.converged) {
        out.F = out.tau = Sentinel::NonConvergent;
        return out;
    }
    if (k_shift == 0) {
        out.F = run.F;
        out.tau = run.tau;
        return out;
    }
    out.F = pull_back(run.F, k_shift, gs.params);
    out.tau = out.F - beta_eval(s, gs);
    return out;
}

void validate(const TauConfig& cfg)
{
    if (cfg.n_max < 0 || cfg.k_shift < 0 || !(cfg.tol > 0.0))
        throw std::invalid_argument("TauConfig needs n_max >= 0, k_shift >= 0, tol > 0");
}

}  // namespace

Checked rho1(cplx s, const Params& p)
{
    if (forward_step_singular(s, p))
        return Sentinel::PoleHit;
    return -log1p_b(std::exp(-p.lambda * s), p);
}

Checked rho_step(cplx rho_prev, cplx F_prev_at_s1, const Params& p)
{
    if (F_prev_at_s1 == cplx(0.0, 0.0))
        return Sentinel::PoleHit;
    return guarded_log1p(checked(rho_prev / F_prev_at_s1), p);
}

AbelResult tau_n(cplx s, const Params& p, const TauConfig& cfg, const GSeries& gs)
{
    validate(cfg);
    if (!(p == gs.params))
        throw std::invalid_argument("tau_n: parameters do not match the series");
    const cplx shifted = s + static_cast<double>(cfg.k_shift);
    const auto run = run_rho<Checked>(PointSource{shifted, &gs}, cfg.n_max, cfg.tol, p);
    return to_result(run, s, cfg.k_shift, gs, cfg.n_max > 0);
}

AbelResult tau_fixed_depth(cplx s, const Params& p, int depth, const GSeries& gs, int k_shift)
{
    if (depth < 0 || k_shift < 0)
        throw std::invalid_argument("tau_fixed_depth: depth and k_shift must be non-negative");
    const cplx shifted = s + static_cast<double>(k_shift);
    const auto run = run_rho<Checked>(PointSource{shifted, &gs}, depth, 0.0, p);
    return to_result(run, s, k_shift, gs, false);
}

AbelResult inverse_abel(cplx s, const Params& p, const GSeries& gs, double tol)
{
    std::optional<AbelResult> fallback;
    AbelResult last;
    for (int k = 1; k <= kMaxShift; k *= 2) {
        last = tau_n(s, p, TauConfig{kMaxShift, k, tol}, gs);
        if (!last.F && last.F.sentinel() != Sentinel::NonConvergent)
            return last;
        if (!last.converged || !last.F)
            continue;
        const auto& r = last.rho_terms;
        bool geometric = true;
        if (r.size() >= 6) {
            for (std::size_t i = r.size() - 5; i < r.size(); ++i) {
                const double den = std::abs(r[i - 1]);
                if (!(std::abs(r[i]) < 0.9 * den))
                    geometric = false;
            }
        }
        if (geometric)
            return last;
        if (!fallback)
            fallback = last;
    }
    return fallback ? *fallback : last;
}

Jet beta_jet(cplx s0, int m, const GSeries& gs)
{
    if (m < 0)
        throw std::invalid_argument("beta_jet: order must be non-negative");
    const Params& p = gs.params;
    const cplx center = s0;

    // same folding and seeding as beta_eval, so the constant term matches it
    const cplx s = fold_period(s0, p);
    const long n = series_seed_steps(s, p);
    cplx t = s - static_cast<double>(n);

    const JetSource src{t, center, m, &gs};
    const Jet w = src.exp_shift(p.lambda, t);
    Jet b = Jet::constant(center, m, 0.0);
    for (int k = gs.order(); k >= 1; --k)
        b = (b + gs.coeffs[static_cast<std::size_t>(k)]) * w;

    for (long i = 0; i < n && b; ++i, t += 1.0) {
        if (forward_step_singular(t, p))
            return Jet(Sentinel::PoleHit, center, m);
        b = exp_b(b, p) / (src.exp_shift(-p.lambda, t) + 1.0);
    }
    return b;
}

Jet tau_jet(cplx s0, int m, const Params& p, const TauConfig& cfg, const GSeries& gs)
{
    validate(cfg);
    if (m < 0)
        throw std::invalid_argument("tau_jet: order must be non-negative");
    if (!(p == gs.params))
        throw std::invalid_argument("tau_jet: parameters do not match the series");
    const cplx shifted = s0 + static_cast<double>(cfg.k_shift);
    const auto run = run_rho<Jet>(JetSource{shifted, s0, m, &gs}, cfg.n_max, cfg.tol, p);
    if (run.failure)
        return Jet(*run.failure, s0, m);
    Jet F = run.F;
    for (int i = 0; i < cfg.k_shift && F; ++i)
        F = log_b(F, p);
    return F;
}

double radius_estimate(const Jet& j)
{
    const int m = j.order();
    if (m < 8)
        throw std::invalid_argument("radius_estimate: jet order must be at least 8");
    double worst = 0.0;
    for (int k = m / 2; k <= m; ++k) {
        const double a = std::abs(j[k]);
        if (a > 0.0)
            worst = std::max(worst, std::pow(a, 1.0 / k));
    }
    if (worst == 0.0)
        return std::numeric_limits<double>::infinity();
    return 1.0 / worst;
}

Checked singularity_residual(cplx s, long branch_n, const GSeries& gs)
{
    const Params& p = gs.params;
    const Checked b = beta_eval(s - 1.0, gs);
    if (!b)
        return b;
    return checked(*b + (p.lambda * s - cplx(0.0, 2.0 * kPi * static_cast<double>(branch_n))) / p.mu);
}

Checked locate_singularity(cplx s_guess, long branch_n, const Params& p, const GSeries& gs)
{
    if (!(p == gs.params))
        throw std::invalid_argument("locate_singularity: parameters do not match the series");
    cplx s = s_guess;
    for (int it = 0; it < kSingularityIterations; ++it) {
        const Checked G = singularity_residual(s, branch_n, gs);
        if (!G)
            return G;
        if (std::abs(*G) < kSingularityTol)
            return s;
        const Checked up = singularity_residual(s + kSingularityStep, branch_n, gs);
        const Checked down = singularity_residual(s - kSingularityStep, branch_n, gs);
        if (!up)
            return up;
        if (!down)
            return down;
        const cplx slope = (*up - *down) / (2.0 * kSingularityStep);
        if (slope == cplx(0.0, 0.0) || !std::isfinite(std::abs(slope)))
            return Sentinel::NonConvergent;
        s -= *G / slope;
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
            return Sentinel::NonConvergent;
    }
    const Checked G = singularity_residual(s, branch_n, gs);
    if (G && std::abs(*G) < kSingularityTol)
        return s;
    return Sentinel::NonConvergent;
}

}  // namespace betatet
