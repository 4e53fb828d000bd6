// Finite discrete probability distribution.

#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "entropyflow/core/error.hpp"

namespace entropyflow {

class ProbabilityVector {
public:
    explicit ProbabilityVector(std::vector<double> probs) : probs_(std::move(probs)) {
        require(!probs_.empty(), ErrorKind::InvalidDistribution, "empty distribution");
        double sum = 0.0;
        for (double p : probs_) {
            require(std::isfinite(p), ErrorKind::InvalidDistribution,
                    "probabilities must be finite");
            require(p >= 0.0, ErrorKind::InvalidDistribution, "probabilities must be >= 0");
            sum += p;
        }
        require(std::abs(sum - 1.0) <= 1e-12, ErrorKind::InvalidDistribution,
                "probabilities must sum to 1 within 1e-12");
    }

    static ProbabilityVector uniform(std::size_t n) {
        require(n > 0, ErrorKind::InvalidDistribution, "empty distribution");
        return ProbabilityVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
    }

    std::size_t size() const noexcept { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    const std::vector<double>& probs() const noexcept { return probs_; }

    auto begin() const noexcept { return probs_.begin(); }
    auto end() const noexcept { return probs_.end(); }

private:
    std::vector<double> probs_;
};

} // namespace entropyflow
