// Seeded, reproducible random instances of every domain type.
//
// All randomness flows through Rng, which draws from std::mt19937_64 and
// shapes values itself (Box-Muller for normals), so identical seeds give
// identical streams across platforms; standard-library distributions are
// avoided because their algorithms are implementation-defined.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "entropyflow/classical/grid_density.hpp"
#include "entropyflow/classical/probability_vector.hpp"
#include "entropyflow/quantum/density_matrix.hpp"

namespace entropyflow {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

    /// Standard normal via Box-Muller.
    double normal() {
        const double u1 = 1.0 - uniform(); // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    Complex complex_normal() {
        const double scale = 1.0 / std::sqrt(2.0);
        return Complex{normal() * scale, normal() * scale};
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

inline ProbabilityVector random_probability_vector(Rng& rng, std::size_t n) {
    // Exponential weights normalized: Dirichlet(1, ..., 1).
    std::vector<double> p(n);
    double sum = 0.0;
    for (double& x : p) {
        x = -std::log(1.0 - rng.uniform());
        sum += x;
    }
    for (double& x : p) x /= sum;
    return ProbabilityVector(std::move(p));
}

inline ComplexMatrix random_complex_gaussian(Rng& rng, std::size_t rows, std::size_t cols) {
    ComplexMatrix g(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) g(r, c) = rng.complex_normal();
    return g;
}

inline ComplexMatrix random_hermitian(Rng& rng, std::size_t n, double scale = 1.0) {
    const ComplexMatrix g = random_complex_gaussian(rng, n, n);
    return scale * hermitian_part(g);
}

/// Hermitian with spectrum drawn uniformly from [lo, hi].
inline ComplexMatrix random_hermitian_with_spectrum(Rng& rng, std::size_t n, double lo,
                                                    double hi) {
    const ComplexMatrix u = hermitian_eigendecompose(random_hermitian(rng, n)).eigenvectors;
    ComplexMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = rng.uniform(lo, hi);
    return hermitian_part(u * d * u.adjoint());
}

/// Modified Gram-Schmidt on a complex Gaussian matrix.
inline ComplexMatrix random_unitary(Rng& rng, std::size_t n) {
    ComplexMatrix g = random_complex_gaussian(rng, n, n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t prev = 0; prev < k; ++prev) {
            Complex overlap{0.0, 0.0};
            for (std::size_t r = 0; r < n; ++r) overlap += std::conj(g(r, prev)) * g(r, k);
            for (std::size_t r = 0; r < n; ++r) g(r, k) -= overlap * g(r, prev);
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < n; ++r) norm += std::norm(g(r, k));
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < n; ++r) g(r, k) = g(r, k) / norm;
    }
    return g;
}

/// Full-rank random state G G^dagger / tr(G G^dagger) from a seeded complex
/// Gaussian G.
inline DensityMatrix random_density_matrix(Rng& rng, std::size_t n,
                                           std::optional<Bipartition> bipartition = {}) {
    const ComplexMatrix g = random_complex_gaussian(rng, n, n);
    ComplexMatrix rho = g * g.adjoint();
    rho = (1.0 / trace(rho).real()) * rho;
    return DensityMatrix(hermitian_part(rho), bipartition);
}

inline DensityMatrix random_bipartite_density_matrix(Rng& rng, std::size_t dim_a,
                                                     std::size_t dim_b) {
    return random_density_matrix(rng, dim_a * dim_b, Bipartition{dim_a, dim_b});
}

inline ProjectorBasis random_projector_basis(Rng& rng, std::size_t n) {
    return ProjectorBasis::from_unitary_columns(random_unitary(rng, n));
}

/// Strictly positive random density on the given grid, normalized to unit
/// mass, with rho_star = 1.
inline GridDensity random_grid_density(Rng& rng, std::vector<std::size_t> shape,
                                       std::vector<double> spacing) {
    std::size_t cells = 1;
    for (std::size_t s : shape) cells *= s;
    std::vector<double> values(cells);
    double vol = 1.0;
    for (double h : spacing) vol *= h;
    double mass = 0.0;
    for (double& v : values) {
        v = -std::log(1.0 - rng.uniform());
        mass += v * vol;
    }
    for (double& v : values) v /= mass;
    return GridDensity(std::move(shape), std::move(spacing), std::move(values), 1.0);
}

/// Random assignment into `boxes` labels, repaired so no label is empty.
inline BoxPartition random_partition(Rng& rng, const GridDensity& grid, std::size_t boxes) {
    const std::size_t cells = grid.cell_count();
    require(boxes >= 1 && boxes <= cells, ErrorKind::PartitionMismatch,
            "box count must be in [1, cellCount]");
    std::vector<std::size_t> assignment(cells);
    std::vector<std::size_t> counts(boxes, 0);
    for (std::size_t c = 0; c < cells; ++c) {
        assignment[c] = rng.index(boxes);
        ++counts[assignment[c]];
    }
    for (std::size_t b = 0; b < boxes; ++b) {
        while (counts[b] == 0) {
            const std::size_t steal = rng.index(cells);
            if (counts[assignment[steal]] > 1) {
                --counts[assignment[steal]];
                assignment[steal] = b;
                ++counts[b];
            }
        }
    }
    return BoxPartition(grid, std::move(assignment));
}

} // namespace entropyflow
