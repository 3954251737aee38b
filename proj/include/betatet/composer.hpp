#pragma once

#include "betatet/core.hpp"

#include <functional>
#include <span>

namespace betatet {

/// One family q_j(s, z), j >= 1, of an inner composition
///   q_1(s, q_2(s, ... q_n(s, z)))
/// whose terms tend to the constant limit_A as j grows.
///
/// eval must be safe to call concurrently.
struct CompositionTerm {
    std::function<Checked(long j, cplx s, cplx z)> eval;
    cplx limit_A{0.0, 0.0};
};

struct CompositionResult {
    Checked value = Sentinel::NonConvergent;
    long terms_used = 0;
    /// |q_n(s, z0) - A| at the truncation index n.
    double tail_bound = 0.0;
};

inline constexpr long kDefaultCompositionTerms = 200;

/// Truncated inner composition. The truncation index n is the first j with
/// |q_j(s, z0) - A| < tol; the nest is then evaluated innermost-first from
/// q_n(s, z0) out to q_1. NonConvergent if no such j <= j_max exists.
CompositionResult inner_compose(const CompositionTerm& term, cplx s, cplx z0, double tol,
                                long j_max = kDefaultCompositionTerms);

/// sum_{j=j_from}^{j_to} max_{s, z} |q_j(s, z) - A| over the sample grid.
/// A finite value is a numeric witness that the tail is summable.
Guarded<double> tail_summability(const CompositionTerm& term, std::span<const cplx> s_samples,
                                std::span<const cplx> z_samples, long j_from, long j_to);

/// The tail family j -> q_{j + offset}, for splitting a composition into a
/// head of `offset` terms around the remaining tail.
CompositionTerm shifted(CompositionTerm term, long offset);

}  // namespace betatet
