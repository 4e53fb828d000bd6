// Discretium -> discretium coarse graining by aggregating pairs of states.
// The state count stays fixed; only probabilities move closer together, so
// Shannon entropy can never decrease.

#pragma once

#include <cmath>
#include <string>

#include "entropyflow/classical/entropy.hpp"

namespace entropyflow {

namespace detail {

inline void check_pair(const ProbabilityVector& p, std::size_t a, std::size_t b) {
    require(a < p.size() && b < p.size(), ErrorKind::IndexError,
            "aggregation index out of range");
    require(a != b, ErrorKind::IndexError, "aggregation indices must differ");
}

inline ProbabilityVector aggregate_checked(const ProbabilityVector& p, std::size_t a,
                                           std::size_t b, double pa_new, double pb_new) {
    std::vector<double> q = p.probs();
    q[a] = pa_new;
    q[b] = pb_new;
    ProbabilityVector out(std::move(q));
    require(shannon_entropy(out) >= shannon_entropy(p) - 1e-12, ErrorKind::NumericalFailure,
            "aggregation decreased the entropy");
    return out;
}

} // namespace detail

/// Replace p_a and p_b by their mean.
inline ProbabilityVector aggregate_naive(const ProbabilityVector& p, std::size_t a,
                                         std::size_t b) {
    detail::check_pair(p, a, b);
    const double mean = 0.5 * (p[a] + p[b]);
    return detail::aggregate_checked(p, a, b, mean, mean);
}

/// Asymmetric averaging: p_a' = lambda p_a + (1-lambda) p_b and vice versa.
/// The pair mean is preserved and the gap contracts by |2 lambda - 1|.
inline ProbabilityVector aggregate_asymmetric(const ProbabilityVector& p, std::size_t a,
                                              std::size_t b, double lambda) {
    detail::check_pair(p, a, b);
    require(std::isfinite(lambda) && lambda > 0.0 && lambda < 1.0, ErrorKind::LambdaOutOfRange,
            "lambda must lie strictly inside (0, 1)");
    const double pa_new = lambda * p[a] + (1.0 - lambda) * p[b];
    const double pb_new = (1.0 - lambda) * p[a] + lambda * p[b];
    return detail::aggregate_checked(p, a, b, pa_new, pb_new);
}

} // namespace entropyflow
