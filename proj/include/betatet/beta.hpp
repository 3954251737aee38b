#pragma once

#include "betatet/composer.hpp"
#include "betatet/core.hpp"

#include <iosfwd>
#include <vector>

namespace betatet {

inline constexpr int kDefaultSeriesOrder = 120;
inline constexpr double kDefaultComposeTol = 1e-14;

/// beta_series is trusted only for Re(lambda s) < Re(lambda) - kSeriesMargin.
inline constexpr double kSeriesMargin = 0.5;

/// Points closer than this (in the lambda-scaled variable) to a zero of
/// 1 + e^{lambda(j - s)} are reported as PoleHit.
inline constexpr double kLatticeTolerance = 1e-9;

/// Taylor coefficients c_0..c_K of g(w) = sum c_k w^k, where
/// beta(s) = g(e^{lambda s}).
struct GSeries {
    Params params;
    std::vector<cplx> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// s = s0 + n_shift + m_period * (2 pi i / lambda), with s0 in the
/// parallelogram spanned by 1 and the period.
struct FundamentalCoords {
    cplx s0;
    long n_shift = 0;
    long m_period = 0;
};

/// q_j(s, z) = e^{mu z} / (1 + e^{lambda (j - s)}), with limit A = 0.
CompositionTerm beta_terms(const Params& p);

/// First construction: the inner composition of beta_terms started at z0 = 0.
Checked beta_compose(cplx s, const Params& p, double tol = kDefaultComposeTol,
                     long j_max = kDefaultCompositionTerms);

/// Second construction: coefficients of g from the identity
///   g(e^lambda w) (1 + w) = w e^{mu g(w)}
/// solved order by order. Throws SentinelError(Overflow) if a coefficient
/// leaves double range.
GSeries g_coefficients(const Params& p, int K = kDefaultSeriesOrder);

/// sum_k c_k e^{k lambda s}. NonConvergent outside the trusted half-plane.
Checked beta_series(cplx s, const GSeries& gs);

/// Hybrid evaluator: fold the period, seed from the series n steps to the
/// left, then apply beta(t+1) = e^{mu beta(t)} / (1 + e^{-lambda t}) forward.
Checked beta_eval(cplx s, const GSeries& gs);

/// Pull back with beta(t-1) = log_b beta(t) + log_b(1 + e^{-lambda (t-1)}),
/// principal branch, `steps` times starting from beta_eval(s).
Checked beta_backward(cplx s, const GSeries& gs, int steps);

/// s shifted by the whole number of periods nearest to its lattice
/// coordinate, so that |Im| stays within half a period strip.
cplx fold_period(cplx s, const Params& p);

/// Smallest n >= 0 with Re(lambda (s - n)) < Re(lambda) - kSeriesMargin.
long series_seed_steps(cplx s, const Params& p);

FundamentalCoords to_fundamental(cplx s, const Params& p);

/// True when 1 + e^{-lambda t} vanishes to within kLatticeTolerance, i.e.
/// t + 1 lies on the singular lattice.
bool forward_step_singular(cplx t, const Params& p);

/// Text export with hexadecimal floats; read_gseries(write_gseries(x)) == x.
void write_gseries(std::ostream& os, const GSeries& gs);
GSeries read_gseries(std::istream& is);

}  // namespace betatet
