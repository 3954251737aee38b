#pragma once

#include "betatet/beta.hpp"
#include "betatet/core.hpp"

#include <vector>

namespace betatet {

// ---- orbit classification -------------------------------------------------

enum class Verdict { Fatou, Julia, Undecided };

std::string_view to_string(Verdict v) noexcept;

struct Classification {
    Verdict verdict = Verdict::Undecided;
    /// min / max of |beta(s' + k)| over the window and all probe points.
    double orbit_min = 0.0;
    double orbit_max = 0.0;
    int k_window = 0;
};

/// Finite-window thresholds for classify_point. K = 0 selects 80 / Re(lambda).
struct ClassifyConfig {
    int K = 0;
    double delta = 1e-8;
    double D = 1e8;
    double probe_radius = 0.02;
    int probes = 8;

    int window(const Params& p) const;
};

/// Probe beta(s' + k), k in [K/2, K], at s' = s and at `probes` points on a
/// circle of radius probe_radius around s, with h = 1/beta:
///  - Julia if any orbit value is a sentinel or has |h| outside (delta, D);
///  - Undecided if all orbits stay bounded but the probes have not merged by
///    k = K (spread above 1e-3 (1 + |beta(s + K)|));
///  - Fatou otherwise.
Classification classify_point(cplx s, const GSeries& gs, const ClassifyConfig& cfg = {});

/// max over the sample circle and k in [K/2, K] of |1 / (mu beta(s + k))|.
/// +infinity when any orbit value is a sentinel or below 1e-300 in modulus.
double a_mu_estimate(cplx s_center, double radius, const GSeries& gs, int K, int samples);

// ---- attracting fixed point and Koenigs linearisation --------------------

struct FixedPointData {
    cplx omega;
    /// gamma = mu * omega, the derivative of exp_b at omega.
    cplx multiplier;
    int iterations = 0;

    bool operator==(const FixedPointData&) const = default;
};

/// Iterate z <- e^{mu z} from z = 0 until |dz| < 1e-13, then polish with
/// Newton on e^{mu z} - z. NonConvergent after max_iter steps or when the
/// orbit escapes (overflows).
Guarded<FixedPointData> omega_fixed_point(const Params& p, int max_iter = 100000);

/// Solve phi(f(u)) = gamma phi(u), phi(u) = u + O(u^2), for a map given by
/// its Taylor coefficients f[0] = 0, f[1] = gamma, f[2], ... around a fixed
/// point at the origin. Returns phi[0..order] with phi[0] = 0, phi[1] = 1.
/// Throws std::invalid_argument if gamma^k = gamma for some 2 <= k <= order.
std::vector<cplx> schroeder_coefficients(const std::vector<cplx>& f);

/// Compositional inverse of a series a[0] = 0, a[1] != 0, to the same order.
std::vector<cplx> reverse_series(const std::vector<cplx>& a);

inline constexpr int kDefaultKoenigsOrder = 32;

/// Fraction of the certified disk 0.5 / |mu| used for series evaluation.
inline constexpr double kKoenigsWorkingFraction = 0.5;

struct KoenigsSeries {
    Params params;
    FixedPointData fp;
    /// phi(omega + u) = sum phi_coeffs[k] u^k, index 0 unused (zero).
    std::vector<cplx> phi_coeffs;
    /// phi^{-1}(v) = omega + sum phi_inv_coeffs[k] v^k.
    std::vector<cplx> phi_inv_coeffs;
    /// Radius (in u and in v) inside which both series are evaluated.
    double working_radius = 0.0;

    int order() const { return static_cast<int>(phi_coeffs.size()) - 1; }
};

/// NonConvergent if no attracting fixed point is found or |gamma| >= 1 - 1e-9.
Guarded<KoenigsSeries> koenigs_series(const Params& p, int order = kDefaultKoenigsOrder);

/// Direct series evaluation; no range checks.
cplx koenigs_phi(cplx z, const KoenigsSeries& ks);
cplx koenigs_phi_inv(cplx v, const KoenigsSeries& ks);

/// Regular Abel function alpha(z) = ln phi(z_n) / ln gamma - n, where z_n is
/// the first forward iterate inside the working disk. NonConvergent if the
/// orbit does not get there within 200 steps; PoleHit at z = omega.
Checked abel_regular(cplx z, const KoenigsSeries& ks);

/// Offset with regular_tet(0) = 1, namely -alpha(1).
Checked regular_tet_offset(const KoenigsSeries& ks);

/// phi^{-1}(gamma^{s - s0_norm}). When gamma^{s - s0_norm} lies outside the
/// working disk the evaluation point is moved n steps right and the result
/// pulled back with n principal log_b steps (PoleHit if one meets zero).
Checked regular_tet(cplx s, const KoenigsSeries& ks, cplx s0_norm);

// ---- theta mapping --------------------------------------------------------

struct ThetaValue {
    Checked theta = Sentinel::NonConvergent;
    int n_used = 0;
    double drift = 0.0;
};

/// theta_n = alpha(beta(s + n)) - s - n for n = 1, 2, ... until
/// |theta_n - theta_{n-1}| < tol.
ThetaValue theta_map(cplx s, const GSeries& gs, const KoenigsSeries& ks, int n_max = 80,
                     double tol = 1e-9);

// ---- residue identity -----------------------------------------------------

struct ResidueCheck {
    Checked integral = Sentinel::NonConvergent;
    cplx expected;
    double rel_err = 0.0;
};

/// Trapezoid rule for the contour integral of beta around the pole
/// c = 1 + (2 k_index + 1) pi i / lambda, compared with the residue value
/// (2 pi i / lambda) e^{mu beta(c - 1)}. Throws std::invalid_argument unless
/// 0 < radius < min(1, |2 pi / lambda|) and nodes >= 64.
ResidueCheck residue_check(const GSeries& gs, long k_index, double radius, int nodes);

}  // namespace betatet
