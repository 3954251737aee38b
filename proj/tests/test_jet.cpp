#include "betatet/jet.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <cmath>
#include <sstream>

using namespace betatet;

namespace {

double factorial(int k)
{
    double f = 1.0;
    for (int i = 2; i <= k; ++i)
        f *= i;
    return f;
}

/// h as a jet at the given centre.
Jet offset(cplx center, int m)
{
    return Jet::variable(center, m) + (-center);
}

}  // namespace

TEST_CASE("constants, variables and the Cauchy product")
{
    const Jet x = Jet::variable(2.0, 4);
    CHECK(x.order() == 4);
    CHECK(x[0] == cplx(2.0, 0.0));
    CHECK(x[1] == cplx(1.0, 0.0));
    CHECK(x[2] == cplx(0.0, 0.0));
    const Jet sq = x * x;  // (2 + h)^2 = 4 + 4h + h^2
    CHECK(sq[0] == cplx(4.0, 0.0));
    CHECK(sq[1] == cplx(4.0, 0.0));
    CHECK(sq[2] == cplx(1.0, 0.0));
    CHECK(sq[3] == cplx(0.0, 0.0));
    const Jet c = Jet::constant(2.0, 4, cplx(0.0, 3.0));
    CHECK((c * x)[1] == cplx(0.0, 3.0));
    CHECK(*(x + c).value() == cplx(2.0, 3.0));
}

TEST_CASE("division, exp and logs against closed forms")
{
    const int m = 12;
    const Jet h = offset(0.0, m);
    // 1 / (1 - h) = sum h^k
    const Jet geo = Jet::constant(0.0, m, 1.0) / (Jet::constant(0.0, m, 1.0) - h);
    for (int k = 0; k <= m; ++k)
        CHECK(std::abs(geo[k] - 1.0) < 1e-15);
    // exp(h) = sum h^k / k!
    const Jet e = exp(h);
    for (int k = 0; k <= m; ++k)
        CHECK(std::abs(e[k] - 1.0 / factorial(k)) < 1e-16);
    // exp(h^2): coefficient 2j is 1/j!
    const Jet g = exp(h * h);
    for (int k = 0; k <= m; ++k) {
        const double want = k % 2 ? 0.0 : 1.0 / factorial(k / 2);
        CHECK(std::abs(g[k] - want) < 1e-16);
    }
    // log1p(h) = sum (-1)^{k+1} h^k / k
    const Jet l = log1p(h);
    for (int k = 1; k <= m; ++k)
        CHECK(std::abs(l[k] - (k % 2 ? 1.0 : -1.0) / k) < 1e-15);
    // log(exp(z)) = z near a generic point
    const Jet z = Jet::variable(cplx(0.3, -0.4), m) * cplx(0.7, 0.2);
    const Jet round = log(exp(z));
    for (int k = 0; k <= m; ++k)
        CHECK(std::abs(round[k] - z[k]) < 1e-14);
    // (a * b) / b = a
    const Jet a = exp(z) + 2.0, b = z * z + 1.5;
    const Jet back = (a * b) / b;
    for (int k = 0; k <= m; ++k)
        CHECK(std::abs(back[k] - a[k]) < 1e-13 * (1.0 + std::abs(a[k])));
}

TEST_CASE("base-mu lifts agree with the point functions on constant terms")
{
    const Params p(1.0, cplx(0.4, 0.3));
    const Jet z = Jet::variable(cplx(0.5, 0.25), 6);
    CHECK(std::abs(*exp_b(z, p).value() - *exp_b(cplx(0.5, 0.25), p)) < 1e-16);
    CHECK(std::abs(*log_b(z, p).value() - *log_b(cplx(0.5, 0.25), p)) < 1e-15);
    CHECK(std::abs(*log1p_b(z, p).value() - *log1p_b(cplx(0.5, 0.25), p)) < 1e-15);
    // derivative of e^{mu z} is mu e^{mu z}
    CHECK(std::abs(exp_b(z, p)[1] - p.mu * *exp_b(cplx(0.5, 0.25), p)) < 1e-15);
}

TEST_CASE("poison absorbs and sentinels surface")
{
    const Jet z = Jet::variable(1.0, 5);
    const Jet zero = Jet::constant(1.0, 5, 0.0);
    const Jet pole = z / zero;
    REQUIRE_FALSE(pole.ok());
    CHECK(pole.sentinel() == Sentinel::PoleHit);
    CHECK((pole + z).sentinel() == Sentinel::PoleHit);
    CHECK((z * pole).sentinel() == Sentinel::PoleHit);
    CHECK(exp(pole).sentinel() == Sentinel::PoleHit);
    CHECK(log(zero).sentinel() == Sentinel::PoleHit);
    CHECK(log1p(zero + (-1.0)).sentinel() == Sentinel::PoleHit);
    CHECK(exp_b(z * 1000.0, Params(1.0, 1.0)).sentinel() == Sentinel::Overflow);
    CHECK(pole.value().sentinel() == Sentinel::PoleHit);
    CHECK(exp(z * 800.0).sentinel() == Sentinel::Overflow);
}

TEST_CASE("truncating an order-m result reproduces the order-m' computation exactly")
{
    const Params p(1.0, cplx(0.8, -0.1));
    auto expr = [&p](int m) {
        const Jet s = Jet::variable(cplx(0.2, 0.6), m);
        const Jet t = exp_b(s * s, p) / (exp(s * cplx(-1.0, 0.0)) + 1.0);
        return log1p_b(t * 0.3, p) + log(t) * s;
    };
    const Jet big = expr(20);
    for (int mp : {0, 1, 5, 13}) {
        const Jet small = expr(mp);
        const Jet cut = big.truncated(mp);
        CHECK(cut.coeffs() == small.coeffs());
    }
    CHECK_THROWS_AS(big.truncated(21), std::invalid_argument);
}

TEST_CASE("jet text export reloads bit for bit")
{
    const Jet j = exp(Jet::variable(cplx(0.1, -0.7), 9) * cplx(1.3, 0.4));
    std::stringstream buf;
    write_jet(buf, j);
    CHECK(buf.str().rfind("center=", 0) == 0);
    CHECK(buf.str().find(" m=9\n") != std::string::npos);
    const Jet back = read_jet(buf);
    CHECK(back.center() == j.center());
    CHECK(back.coeffs() == j.coeffs());
    std::stringstream out;
    CHECK_THROWS_AS(write_jet(out, Jet(Sentinel::Overflow)), SentinelError);
}
