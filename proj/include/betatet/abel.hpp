#pragma once

#include "betatet/beta.hpp"
#include "betatet/core.hpp"
#include "betatet/jet.hpp"

#include <vector>

namespace betatet {

/// Depth, evaluation offset and stopping threshold of the rho process.
/// The log branch is always principal.
struct TauConfig {
    int n_max = 64;
    int k_shift = 0;
    double tol = 1e-12;
};

struct AbelResult {
    /// beta(s) + tau(s), the inverse Abel value.
    Checked F = Sentinel::NonConvergent;
    Checked tau = Sentinel::NonConvergent;
    int n_used = 0;
    /// |rho^{n_used}| at the evaluation point.
    double rho_tail = 0.0;
    bool converged = false;
    /// rho^1 .. rho^{n_used} at the (shifted) evaluation point.
    std::vector<cplx> rho_terms;
};

/// Terms smaller than this distance from the log1p cut are NonConvergent
/// rather than evaluated on an arbitrary side of the branch.
inline constexpr double kCutTolerance = 1e-12;

/// rho^1(s) = -log_b(1 + e^{-lambda s}); PoleHit on the singular lattice.
Checked rho1(cplx s, const Params& p);

/// One rho recursion step: log_b(1 + rho_prev / F_prev_at_s1).
/// PoleHit when F_prev is zero or the argument is exactly -1;
/// NonConvergent when 1 + rho/F is within kCutTolerance of zero.
Checked rho_step(cplx rho_prev, cplx F_prev_at_s1, const Params& p);

/// tau(s) as a sum of rho terms evaluated at s' = s + k_shift, then pulled
/// back k_shift times through F(t-1) = log_b F(t).
///
/// Stops at the first level j with |rho^j| < tol whose last (up to) three
/// ratios |rho^i / rho^{i-1}| are below one. If n_max is reached first, F and
/// tau are NonConvergent. Overflow of any beta value that is still needed
/// is reported as Overflow.
AbelResult tau_n(cplx s, const Params& p, const TauConfig& cfg, const GSeries& gs);

/// Exactly `depth` rho levels without any stopping rule, i.e. tau^depth(s)
/// and F^depth(s). depth = 0 gives tau = 0 and F = beta(s).
AbelResult tau_fixed_depth(cplx s, const Params& p, int depth, const GSeries& gs,
                           int k_shift = 0);

inline constexpr int kMaxShift = 64;

/// Adaptive driver: k_shift = 1, 2, 4, ..., 64 until the rho terms converge
/// and decay geometrically (last five ratios below 0.9 whenever at least six
/// terms exist), or a sentinel other than NonConvergent blocks.
AbelResult inverse_abel(cplx s, const Params& p, const GSeries& gs, double tol = 1e-12);

/// Order-m Taylor jet of beta at s0: the series seeded in jet arithmetic,
/// then pushed forward through the functional equation.
Jet beta_jet(cplx s0, int m, const GSeries& gs);

/// The rho process carried out in order-m jet arithmetic centred at s0.
/// Returns the jet of F = beta + tau. Uses the same stopping rule as tau_n
/// on constant terms; when n_max is reached first the depth-n_max jet is
/// returned (it is the Taylor jet of F^{n_max}).
Jet tau_jet(cplx s0, int m, const Params& p, const TauConfig& cfg, const GSeries& gs);

/// 1 / max_{k in [m/2, m]} |c_k|^{1/k}, or +infinity when that tail is all
/// zero. Throws std::invalid_argument for order < 8.
double radius_estimate(const Jet& j);

inline constexpr double kSingularityStep = 1e-6;
inline constexpr double kSingularityTol = 1e-9;
inline constexpr int kSingularityIterations = 50;

/// G(s) = beta(s-1) + lambda s / mu - 2 pi i n / mu.
Checked singularity_residual(cplx s, long branch_n, const GSeries& gs);

/// Newton iteration on singularity_residual with a central finite
/// difference derivative. NonConvergent unless |G| < kSingularityTol within
/// kSingularityIterations steps.
Checked locate_singularity(cplx s_guess, long branch_n, const Params& p, const GSeries& gs);

}  // namespace betatet
