// Test-only oracles, kept independent of the library's implementation paths:
// direct scalar entropy evaluation, index-formula Kronecker products and
// partial traces, and small helpers for comparing spectra.

#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <vector>

#include "entropyflow/linalg/complex_matrix.hpp"

namespace oracles {

using entropyflow::Complex;
using entropyflow::ComplexMatrix;

/// -sum p ln p evaluated directly; inputs are hand-derived spectra.
inline double entropy_of(std::initializer_list<double> probs) {
    double s = 0.0;
    for (double p : probs)
        if (p > 0.0) s -= p * std::log(p);
    return s;
}

inline double entropy_of(const std::vector<double>& probs) {
    double s = 0.0;
    for (double p : probs)
        if (p > 0.0) s -= p * std::log(p);
    return s;
}

/// (a (x) b)[(i k),(j l)] = a(i,j) b(k,l), written from the index formula.
inline ComplexMatrix kron_oracle(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

/// Index-summation partial trace over the second factor.
inline ComplexMatrix ptrace_b_oracle(const ComplexMatrix& ab, std::size_t na, std::size_t nb) {
    ComplexMatrix out(na, na);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t b = 0; b < nb; ++b) out(i, j) += ab(i * nb + b, j * nb + b);
    return out;
}

inline ComplexMatrix ptrace_a_oracle(const ComplexMatrix& ab, std::size_t na, std::size_t nb) {
    ComplexMatrix out(nb, nb);
    for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l)
            for (std::size_t a = 0; a < na; ++a) out(k, l) += ab(a * nb + k, a * nb + l);
    return out;
}

inline bool spectra_match(std::vector<double> got, std::vector<double> expected, double tol) {
    if (got.size() != expected.size()) return false;
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    for (std::size_t i = 0; i < got.size(); ++i)
        if (std::abs(got[i] - expected[i]) > tol) return false;
    return true;
}

} // namespace oracles
