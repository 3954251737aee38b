#include "betatet/composer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace betatet {

CompositionResult inner_compose(const CompositionTerm& term, cplx s, cplx z0, double tol, long j_max)
{
    if (!(tol > 0.0))
        throw std::invalid_argument("inner_compose: tol must be positive");
    if (j_max < 1)
        throw std::invalid_argument("inner_compose: j_max must be at least 1");

    CompositionResult out;
    long n = 0;
    Checked innermost = Sentinel::NonConvergent;
    for (long j = 1; j <= j_max; ++j) {
        innermost = term.eval(j, s, z0);
        if (!innermost) {
            out.value = innermost;
            out.terms_used = j;
            return out;
        }
        out.tail_bound = std::abs(*innermost - term.limit_A);
        if (out.tail_bound < tol) {
            n = j;
            break;
        }
    }
    if (n == 0) {
        out.value = Sentinel::NonConvergent;
        out.terms_used = j_max;
        return out;
    }

    Checked z = innermost;
    for (long j = n - 1; j >= 1 && z; --j)
        z = term.eval(j, s, *z);
    out.value = z;
    out.terms_used = n;
    return out;
}

Guarded<double> tail_summability(const CompositionTerm& term, std::span<const cplx> s_samples,
                                std::span<const cplx> z_samples, long j_from, long j_to)
{
    if (s_samples.empty() || z_samples.empty())
        throw std::invalid_argument("tail_summability: empty sample set");
    if (j_from > j_to)
        throw std::invalid_argument("tail_summability: j_from > j_to");

    double total = 0.0;
    for (long j = j_from; j <= j_to; ++j) {
        double worst = 0.0;
        for (cplx s : s_samples) {
            for (cplx z : z_samples) {
                const Checked q = term.eval(j, s, z);
                if (!q)
                    return q.sentinel();
                worst = std::max(worst, std::abs(*q - term.limit_A));
            }
        }
        total += worst;
    }
    return total;
}

CompositionTerm shifted(CompositionTerm term, long offset)
{
    auto inner = std::move(term.eval);
    term.eval = [inner = std::move(inner), offset](long j, cplx s, cplx z) {
        return inner(j + offset, s, z);
    };
    return term;
}

}  // namespace betatet
