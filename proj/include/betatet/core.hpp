#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <variant>

namespace betatet {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Largest Re(mu*z) for which exp_b is attempted. Anything beyond is reported
/// as Overflow rather than evaluated.
inline constexpr double kOverflowExponent = 700.0;

enum class Sentinel { Overflow, PoleHit, NonConvergent };

std::string_view to_string(Sentinel s) noexcept;

/// Thrown where a sentinel cannot be carried in the return type (series
/// construction, file export).
class SentinelError : public std::runtime_error {
public:
    explicit SentinelError(Sentinel s);
    Sentinel sentinel() const noexcept { return sentinel_; }

private:
    Sentinel sentinel_;
};

/// A value of type T or a sentinel explaining why there is no value.
template <typename T>
class Guarded {
public:
    Guarded(T v) : state_(std::move(v)) {}  // NOLINT: implicit by intent
    Guarded(Sentinel s) : state_(s) {}      // NOLINT

    bool ok() const noexcept { return std::holds_alternative<T>(state_); }
    explicit operator bool() const noexcept { return ok(); }

    const T& value() const
    {
        if (!ok())
            throw SentinelError(std::get<Sentinel>(state_));
        return std::get<T>(state_);
    }
    const T& operator*() const { return value(); }
    const T* operator->() const { return &value(); }

    Sentinel sentinel() const
    {
        if (ok())
            throw std::logic_error("Guarded::sentinel on a value");
        return std::get<Sentinel>(state_);
    }

    T value_or(T fallback) const { return ok() ? std::get<T>(state_) : fallback; }

    bool operator==(const Guarded&) const = default;

private:
    std::variant<T, Sentinel> state_;
};

/// Complex value threaded through every evaluator. Sentinels absorb: any
/// arithmetic involving a sentinel yields the (left-most) sentinel.
using Checked = Guarded<cplx>;

/// Wrap a finished computation: non-finite components become Overflow.
Checked checked(cplx v) noexcept;

Checked operator+(const Checked& a, const Checked& b);
Checked operator-(const Checked& a, const Checked& b);
Checked operator*(const Checked& a, const Checked& b);
/// Division by an exact zero is a PoleHit.
Checked operator/(const Checked& a, const Checked& b);
Checked operator-(const Checked& a);

/// The pair (lambda, mu) of beta_{lambda,mu}; base b = e^mu.
struct Params {
    cplx lambda{1.0, 0.0};
    cplx mu{1.0, 0.0};

    Params() = default;
    /// Throws std::invalid_argument unless Re(lambda) > 0 and mu != 0.
    Params(cplx lambda_, cplx mu_);

    /// 2*pi*i / lambda.
    cplx period() const { return cplx(0.0, 2.0 * kPi) / lambda; }

    bool operator==(const Params&) const = default;
};

struct BranchIndex {
    long k = 0;
};

/// e^{mu z}; Overflow when Re(mu z) exceeds kOverflowExponent.
Checked exp_b(cplx z, const Params& p) noexcept;
Checked exp_b(const Checked& z, const Params& p) noexcept;

/// (ln|z| + i Arg z + 2 pi i k) / mu with Arg in (-pi, pi]. PoleHit at z = 0.
Checked log_b(cplx z, const Params& p, BranchIndex branch = {}) noexcept;
Checked log_b(const Checked& z, const Params& p, BranchIndex branch = {}) noexcept;

/// Principal log(1 + z), accurate for small |z|.
cplx log1p_complex(cplx z) noexcept;

/// log_b(1 + z) on the principal branch without cancellation for small z.
/// PoleHit at z = -1.
Checked log1p_b(cplx z, const Params& p) noexcept;
Checked log1p_b(const Checked& z, const Params& p) noexcept;

/// Distance from v to the nearest odd multiple of pi*i, i.e. to a zero of
/// 1 + e^{v}.
double odd_pi_distance(cplx v) noexcept;

}  // namespace betatet
