#include "betatet/abel.hpp"
#include "betatet/dynamics.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace betatet;

namespace {

const Params kE(1.0, 1.0);
const Params kRoot2(1.0, oracle::kHalfLn2);

const GSeries& series_e()
{
    static const GSeries gs = g_coefficients(kE);
    return gs;
}

const GSeries& series_root2()
{
    static const GSeries gs = g_coefficients(kRoot2);
    return gs;
}

const KoenigsSeries& koenigs_root2()
{
    static const KoenigsSeries ks = *koenigs_series(kRoot2);
    return ks;
}

/// Random points of the period parallelogram (lambda = 1) at least `margin`
/// away from its corners.
std::vector<cplx> parallelogram(int count, std::uint64_t salt, double margin)
{
    auto gen = oracle::rng(salt);
    std::uniform_real_distribution<double> re(0.0, 1.0), im(-oracle::kPi, oracle::kPi);
    const cplx corners[4] = {{0.0, oracle::kPi}, {0.0, -oracle::kPi}, {1.0, oracle::kPi}, {1.0, -oracle::kPi}};
    std::vector<cplx> pts;
    while (static_cast<int>(pts.size()) < count) {
        const cplx s(re(gen), im(gen));
        bool ok = true;
        for (const cplx c : corners)
            ok = ok && std::abs(s - c) > margin;
        if (ok)
            pts.push_back(s);
    }
    return pts;
}

}  // namespace

TEST_CASE("attracting fixed points")
{
    const auto root2 = omega_fixed_point(kRoot2);
    REQUIRE(root2.ok());
    CHECK(std::abs(root2->omega - 2.0) < 1e-13);
    CHECK(std::abs(root2->multiplier - std::log(2.0)) < 1e-13);

    CHECK(omega_fixed_point(kE).sentinel() == Sentinel::NonConvergent);

    const Params st(1.0, cplx(0.3, 1.0));
    const auto inside = omega_fixed_point(st);
    REQUIRE(inside.ok());
    CHECK(std::abs(inside->multiplier) < 1.0);
    CHECK(std::abs(*exp_b(inside->omega, st) - inside->omega) <= 1e-12 * (1.0 + std::abs(inside->omega)));
    CHECK_THROWS_AS(omega_fixed_point(kRoot2, 0), std::invalid_argument);
}

TEST_CASE("point classification")
{
    for (const double s : {0.5, 1.0, 2.0}) {
        CHECK(classify_point(s, series_e()).verdict == Verdict::Julia);
        const Classification c = classify_point(s, series_root2());
        CHECK(c.verdict == Verdict::Fatou);
        CHECK(c.k_window == 80);
        CHECK(c.orbit_min > 1.9);
        CHECK(c.orbit_max < 2.1);
    }
    const Verdict lattice = classify_point(cplx(5.0, oracle::kPi), series_root2()).verdict;
    CHECK(lattice != Verdict::Fatou);
    CHECK_THROWS_AS(classify_point(1.0, series_e(), ClassifyConfig{0, 1.0, 0.5}), std::invalid_argument);
    // a window too short for the probes to merge is reported honestly
    const ClassifyConfig short_window{4, 1e-8, 1e8, 0.3, 8};
    CHECK(classify_point(cplx(0.5, 0.5), series_root2(), short_window).verdict == Verdict::Undecided);
}

TEST_CASE("Shell-Thron coherence: most of the parallelogram is Fatou")
{
    int fatou = 0;
    const auto pts = parallelogram(50, 41, 0.5);
    for (const cplx s : pts)
        fatou += classify_point(s, series_root2()).verdict == Verdict::Fatou;
    CHECK(fatou >= 45);
}

TEST_CASE("A_mu window estimates")
{
    const double want = 1.0 / std::log(2.0);
    CHECK(a_mu_estimate(2.0, 0.05, series_root2(), 60, 8) == doctest::Approx(want).epsilon(0.05));
    CHECK(a_mu_estimate(2.0, 0.0, series_root2(), 60, 8) == doctest::Approx(want).epsilon(0.05));
    CHECK(std::isinf(a_mu_estimate(1.0, 0.05, series_e(), 60, 8)));
    CHECK_THROWS_AS(a_mu_estimate(1.0, 0.05, series_e(), 60, 4), std::invalid_argument);
}

TEST_CASE("Schroeder solver and series reversion")
{
    // a linear map is already linearised
    const std::vector<cplx> linear{0.0, 0.4, 0.0, 0.0, 0.0, 0.0};
    const auto phi = schroeder_coefficients(linear);
    CHECK(phi[1] == cplx(1.0, 0.0));
    for (std::size_t k = 2; k < phi.size(); ++k)
        CHECK(phi[k] == cplx(0.0, 0.0));

    // reversion of u + u^2 is the Catalan series
    const std::vector<cplx> a{0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0};
    const auto q = reverse_series(a);
    const double catalan[] = {0.0, 1.0, -1.0, 2.0, -5.0, 14.0, -42.0};
    for (int k = 0; k <= 6; ++k)
        CHECK(std::abs(q[k] - catalan[k]) < 1e-13);
    CHECK_THROWS_AS(schroeder_coefficients({0.0, 1.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(reverse_series({0.0, 0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("Koenigs linearisation at the square root of two")
{
    const KoenigsSeries& ks = koenigs_root2();
    CHECK(ks.order() == kDefaultKoenigsOrder);
    CHECK(ks.phi_coeffs[1] == cplx(1.0, 0.0));
    double residual = 0.0, reversal = 0.0;
    for (int j = 0; j < 20; ++j) {
        const cplx z = 2.0 + std::polar(0.1 * (j % 2 ? 1.0 : 0.5), 2.0 * oracle::kPi * j / 20.0);
        const cplx fz = std::exp(kRoot2.mu * z);
        residual = std::max(residual, std::abs(koenigs_phi(fz, ks) - ks.fp.multiplier * koenigs_phi(z, ks)));
        reversal = std::max(reversal, std::abs(koenigs_phi_inv(koenigs_phi(z, ks), ks) - z));
    }
    CHECK(residual <= 1e-9);
    CHECK(reversal <= 1e-10);
    CHECK(koenigs_series(kE).sentinel() == Sentinel::NonConvergent);
}

TEST_CASE("regular Abel function")
{
    const KoenigsSeries& ks = koenigs_root2();
    const double eps = 1e-7;
    const cplx near = *abel_regular(2.0 + eps, ks);
    CHECK(std::abs(near - std::log(eps) / std::log(std::log(2.0))) < 1e-5);

    auto gen = oracle::rng(42);
    std::uniform_real_distribution<double> re(-3.0, 3.5), im(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
        const cplx z(re(gen), im(gen));
        const Checked a = abel_regular(z, ks);
        const Checked b = abel_regular(std::exp(kRoot2.mu * z), ks);
        REQUIRE(a.ok());
        REQUIRE(b.ok());
        CHECK(std::abs(*b - *a - 1.0) <= 1e-8);
    }
    CHECK(abel_regular(4.5, ks).sentinel() == Sentinel::NonConvergent);
    CHECK(abel_regular(4.0, ks).sentinel() == Sentinel::NonConvergent);
    CHECK(abel_regular(2.0, ks).sentinel() == Sentinel::PoleHit);
}

TEST_CASE("regular tetration")
{
    const KoenigsSeries& ks = koenigs_root2();
    const cplx s0 = *regular_tet_offset(ks);
    CHECK(std::abs(*regular_tet(0.0, ks, s0) - 1.0) <= 1e-9);
    CHECK(std::abs(*regular_tet(1.0, ks, s0) - std::sqrt(2.0)) <= 1e-9);
    const double sqrt2_sqrt2 = std::pow(std::sqrt(2.0), std::sqrt(2.0));
    CHECK(std::abs(*regular_tet(2.0, ks, s0) - sqrt2_sqrt2) <= 1e-9);
    CHECK(sqrt2_sqrt2 == doctest::Approx(1.632526919).epsilon(1e-9));
    CHECK(regular_tet(-2.0, ks, s0).sentinel() == Sentinel::PoleHit);

    const cplx period = cplx(0.0, 2.0 * oracle::kPi) / std::log(ks.fp.multiplier);
    CHECK(std::abs(period) == doctest::Approx(17.143148).epsilon(1e-6));
    for (const cplx s : {cplx(0.3, 0.0), cplx(-0.6, 1.2), cplx(2.5, -3.0)})
        CHECK(std::abs(*regular_tet(s + period, ks, s0) - *regular_tet(s, ks, s0)) <= 1e-8);
    // the functional equation off the real line
    const cplx s(0.4, 0.7);
    CHECK(std::abs(*regular_tet(s + 1.0, ks, s0) - std::exp(kRoot2.mu * *regular_tet(s, ks, s0))) < 1e-10);
}

TEST_CASE("theta mapping")
{
    const KoenigsSeries& ks = koenigs_root2();
    const GSeries& gs = series_root2();
    const cplx P = kRoot2.period();
    for (const cplx s : parallelogram(20, 43, 0.5)) {
        const ThetaValue t = theta_map(s, gs, ks);
        REQUIRE(t.theta.ok());
        CHECK(t.drift <= 1e-9);
        CHECK(std::abs(*theta_map(s + 1.0, gs, ks).theta - *t.theta) <= 1e-7);
        CHECK(std::abs(*theta_map(s + P, gs, ks).theta - *t.theta + P) <= 1e-6);
    }
    CHECK_FALSE(theta_map(cplx(1.0, oracle::kPi), gs, ks).theta.ok());
    CHECK(theta_map(cplx(0.5, 0.5), gs, ks, 3, 1e-15).theta.sentinel() == Sentinel::NonConvergent);
}

TEST_CASE("the inverse Abel function is regular iteration displaced by theta")
{
    const KoenigsSeries& ks = koenigs_root2();
    const GSeries& gs = series_root2();
    const cplx offset = *regular_tet_offset(ks);
    for (const cplx s : parallelogram(10, 44, 0.6)) {
        const AbelResult F = inverse_abel(s, kRoot2, gs);
        const ThetaValue t = theta_map(s, gs, ks);
        REQUIRE(F.F.ok());
        REQUIRE(t.theta.ok());
        CHECK(std::abs(*F.F - *regular_tet(s + *t.theta + offset, ks, offset)) <= 1e-6);
    }
}

TEST_CASE("residue of beta at a lattice pole")
{
    const GSeries& gs = series_root2();
    const ResidueCheck r = residue_check(gs, 0, 0.1, 512);
    REQUIRE(r.integral.ok());
    CHECK(r.rel_err <= 1e-6);
    const cplx want = cplx(0.0, 2.0 * oracle::kPi) *
                      std::exp(kRoot2.mu * oracle::beta_nested(cplx(0.0, oracle::kPi), 1.0, kRoot2.mu));
    CHECK(std::abs(r.expected - want) < 1e-12);

    const ResidueCheck shifted = residue_check(gs, 1, 0.1, 512);
    CHECK(std::abs(shifted.expected - r.expected) < 1e-12);
    CHECK(shifted.rel_err <= 1e-5);

    // coarse rules converge quickly as nodes double
    const double e64 = residue_check(gs, 0, 0.6, 64).rel_err;
    const double e128 = residue_check(gs, 0, 0.6, 128).rel_err;
    CHECK(e128 < e64);

    CHECK_THROWS_AS(residue_check(gs, 0, 1.5, 512), std::invalid_argument);
    CHECK_THROWS_AS(residue_check(gs, 0, 0.1, 32), std::invalid_argument);
}
