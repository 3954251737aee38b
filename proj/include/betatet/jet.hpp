#pragma once

#include "betatet/core.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace betatet {

/// Truncated Taylor polynomial sum_{k<=m} c_k (s - center)^k.
///
/// All arithmetic is exact truncated power-series arithmetic: coefficient k
/// of any result depends only on coefficients 0..k of the operands and is
/// computed by the same sequence of floating-point operations whatever the
/// order, so truncating an order-m result to m' < m reproduces the order-m'
/// computation bit for bit.
///
/// A jet that met a sentinel in any coefficient is poisoned; poison absorbs.
class Jet {
public:
    Jet() = default;
    Jet(cplx center, std::vector<cplx> coeffs);
    explicit Jet(Sentinel s, cplx center = {}, int order = 0);

    static Jet constant(cplx center, int order, cplx value);
    /// The identity s, i.e. center + h.
    static Jet variable(cplx center, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    cplx center() const { return center_; }
    const std::vector<cplx>& coeffs() const { return coeffs_; }
    cplx operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }

    bool ok() const { return !poison_.has_value(); }
    explicit operator bool() const { return ok(); }
    Sentinel sentinel() const;
    /// The constant term as a Checked value.
    Checked value() const;

    Jet truncated(int order) const;

    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator*(const Jet& a, const Jet& b);
    /// PoleHit when the divisor's constant term is zero.
    friend Jet operator/(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a);
    friend Jet operator+(const Jet& a, cplx b);
    friend Jet operator*(const Jet& a, cplx b);
    friend Jet operator*(cplx a, const Jet& b) { return b * a; }

private:
    cplx center_{};
    std::vector<cplx> coeffs_{cplx{}};
    std::optional<Sentinel> poison_;

    friend Jet finish(Jet j);
};

/// Natural exponential of a jet, e' = e g'.
Jet exp(const Jet& g);
/// Principal natural log; PoleHit if the constant term is zero.
Jet log(const Jet& g);
/// log(1 + g), principal, accurate when g's constant term is small.
Jet log1p(const Jet& g);

/// Base-mu lifts matching exp_b / log_b / log1p_b on constant terms.
Jet exp_b(const Jet& z, const Params& p);
Jet log_b(const Jet& z, const Params& p);
Jet log1p_b(const Jet& z, const Params& p);

/// Text export: header "center=<re>,<im> m=<int>" then "c_k = <re> <im>"
/// lines in hexadecimal floats. Poisoned jets throw SentinelError.
void write_jet(std::ostream& os, const Jet& j);
Jet read_jet(std::istream& is);

}  // namespace betatet
