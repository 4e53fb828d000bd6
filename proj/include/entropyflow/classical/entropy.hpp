// Shannon entropy and negentropy of discrete distributions, in nats.

#pragma once

#include <algorithm>
#include <cmath>

#include "entropyflow/classical/probability_vector.hpp"

namespace entropyflow {

/// -sum p_i ln p_i with the 0 ln 0 := 0 convention.
inline double shannon_entropy(const ProbabilityVector& p) {
    double s = 0.0;
    for (double pi : p)
        if (pi > 0.0) s -= pi * std::log(pi);
    return std::max(s, 0.0);
}

/// Raw-array variant for callers holding an already validated distribution.
inline double shannon_entropy_raw(const std::vector<double>& probs) {
    double s = 0.0;
    for (double pi : probs)
        if (pi > 0.0) s -= pi * std::log(pi);
    return std::max(s, 0.0);
}

/// ln N - S, the distance from complete uncertainty.
inline double negentropy(const ProbabilityVector& p) {
    return std::max(std::log(static_cast<double>(p.size())) - shannon_entropy(p), 0.0);
}

} // namespace entropyflow
