// Density matrices (Hermitian, PSD, unit trace) and rank-1 projector bases.
//
// A state optionally carries a bipartite factorization (N_A, N_B); keeping it
// on the state, rather than passing dimensions per call, prevents a pipeline
// from silently switching factorization conventions. Index convention is
// A-major, matching tensor_product.

#pragma once

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "entropyflow/linalg/hermitian_eigen.hpp"
#include "entropyflow/linalg/kron.hpp"

namespace entropyflow {

struct Bipartition {
    std::size_t dim_a;
    std::size_t dim_b;
};

class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix matrix, std::optional<Bipartition> bipartition = {})
        : matrix_(std::move(matrix)), bipartition_(bipartition) {
        require(matrix_.is_square(), ErrorKind::InvalidState, "density matrix must be square");
        require(matrix_.hermitian_defect() <= 1e-12, ErrorKind::InvalidState,
                "density matrix must be Hermitian within 1e-12");
        require(std::abs(trace(matrix_).real() - 1.0) <= 1e-12 &&
                    std::abs(trace(matrix_).imag()) <= 1e-12,
                ErrorKind::InvalidState, "density matrix must have unit trace within 1e-12");
        if (bipartition_) {
            require(bipartition_->dim_a * bipartition_->dim_b == matrix_.rows(),
                    ErrorKind::DimensionMismatch, "bipartition does not factor the dimension");
        }
        matrix_ = hermitian_part(matrix_);
        eigenvalues_ = hermitian_eigenvalues(matrix_);
        require(eigenvalues_.front() >= -1e-10, ErrorKind::InvalidState,
                "density matrix must be positive semidefinite (eigenvalue slack 1e-10)");
    }

    static DensityMatrix pure(const std::vector<Complex>& amplitudes,
                              std::optional<Bipartition> bipartition = {}) {
        const std::size_t n = amplitudes.size();
        require(n > 0, ErrorKind::InvalidState, "empty state vector");
        double norm2 = 0.0;
        for (const Complex& z : amplitudes) norm2 += std::norm(z);
        require(norm2 > 0.0, ErrorKind::InvalidState, "zero state vector");
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = amplitudes[i] * std::conj(amplitudes[j]) / norm2;
        return DensityMatrix(std::move(m), bipartition);
    }

    static DensityMatrix computational_pure(std::size_t n, std::size_t index,
                                            std::optional<Bipartition> bipartition = {}) {
        require(index < n, ErrorKind::IndexError, "basis index out of range");
        std::vector<Complex> amp(n, Complex{0.0, 0.0});
        amp[index] = 1.0;
        return pure(amp, bipartition);
    }

    static DensityMatrix maximally_mixed(std::size_t n,
                                         std::optional<Bipartition> bipartition = {}) {
        require(n > 0, ErrorKind::InvalidState, "dimension must be positive");
        return DensityMatrix((1.0 / static_cast<double>(n)) * ComplexMatrix::identity(n),
                             bipartition);
    }

    /// |Phi+> = (|00> + |11>)/sqrt(2) on a 2x2 bipartition.
    static DensityMatrix bell_phi_plus() {
        const double r = 1.0 / std::sqrt(2.0);
        return pure({Complex{r, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0}, Complex{r, 0.0}},
                    Bipartition{2, 2});
    }

    std::size_t dim() const noexcept { return matrix_.rows(); }
    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    const std::optional<Bipartition>& bipartition() const noexcept { return bipartition_; }

    /// Spectrum ascending, computed once during validation.
    const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }

    DensityMatrix with_bipartition(std::size_t dim_a, std::size_t dim_b) const {
        return DensityMatrix(matrix_, Bipartition{dim_a, dim_b});
    }

    const Bipartition& require_bipartition() const {
        require(bipartition_.has_value(), ErrorKind::NoBipartition,
                "operation requires a bipartite factorization");
        return *bipartition_;
    }

    DensityMatrix marginal(Subsystem keep) const {
        const Bipartition& bip = require_bipartition();
        return DensityMatrix(partial_trace(matrix_, bip.dim_a, bip.dim_b, keep));
    }

private:
    ComplexMatrix matrix_;
    std::optional<Bipartition> bipartition_;
    std::vector<double> eigenvalues_;
};

/// A complete set of N rank-1 orthogonal projectors, or the implicit
/// computational basis. Decoherence is always relative to such a basis.
class ProjectorBasis {
public:
    static ProjectorBasis computational(std::size_t dim) {
        require(dim > 0, ErrorKind::InvalidBasis, "dimension must be positive");
        ProjectorBasis b;
        b.dim_ = dim;
        b.computational_ = true;
        return b;
    }

    static ProjectorBasis from_projectors(std::vector<ComplexMatrix> projectors) {
        require(!projectors.empty(), ErrorKind::InvalidBasis, "empty projector list");
        const std::size_t n = projectors.front().rows();
        require(projectors.size() == n, ErrorKind::InvalidBasis,
                "need exactly N rank-1 projectors for dimension N");
        ComplexMatrix sum(n, n);
        for (const ComplexMatrix& p : projectors) {
            require(p.is_square() && p.rows() == n, ErrorKind::InvalidBasis,
                    "projectors must share one square dimension");
            require(p.hermitian_defect() <= 1e-10, ErrorKind::InvalidBasis,
                    "projectors must be Hermitian");
            require(std::abs(trace(p).real() - 1.0) <= 1e-10, ErrorKind::InvalidBasis,
                    "projectors must have unit trace (rank 1)");
            sum = sum + p;
        }
        require(max_abs(sum - ComplexMatrix::identity(n)) <= 1e-10, ErrorKind::InvalidBasis,
                "projectors must resolve the identity");
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const ComplexMatrix prod = projectors[a] * projectors[b];
                const ComplexMatrix expect = a == b ? projectors[b] : ComplexMatrix(n, n);
                require(max_abs(prod - expect) <= 1e-10, ErrorKind::InvalidBasis,
                        "projectors must be mutually orthogonal idempotents");
            }
        ProjectorBasis basis;
        basis.dim_ = n;
        basis.computational_ = false;
        basis.projectors_ = std::move(projectors);
        return basis;
    }

    /// Projectors onto the columns of a unitary.
    static ProjectorBasis from_unitary_columns(const ComplexMatrix& u) {
        require(u.is_square(), ErrorKind::InvalidBasis, "unitary must be square");
        const std::size_t n = u.rows();
        require(max_abs(u.adjoint() * u - ComplexMatrix::identity(n)) <= 1e-10,
                ErrorKind::InvalidBasis, "matrix is not unitary within 1e-10");
        std::vector<ComplexMatrix> projectors;
        projectors.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            ComplexMatrix p(n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) p(r, c) = u(r, k) * std::conj(u(c, k));
            projectors.push_back(std::move(p));
        }
        return from_projectors(std::move(projectors));
    }

    std::size_t dim() const noexcept { return dim_; }
    bool is_computational() const noexcept { return computational_; }

    /// tr(P_a rho) for every a.
    std::vector<double> weights(const ComplexMatrix& rho) const {
        require(rho.is_square() && rho.rows() == dim_, ErrorKind::InvalidBasis,
                "basis dimension does not match the state");
        std::vector<double> w(dim_);
        if (computational_) {
            for (std::size_t a = 0; a < dim_; ++a) w[a] = rho(a, a).real();
            return w;
        }
        for (std::size_t a = 0; a < dim_; ++a) w[a] = trace(projectors_[a] * rho).real();
        return w;
    }

    /// sum_a P_a tr(P_a x): kill everything off-diagonal in this basis.
    /// Complex-linear in x (weights stay complex for non-Hermitian inputs).
    ComplexMatrix project_diagonal(const ComplexMatrix& x) const {
        require(x.is_square() && x.rows() == dim_, ErrorKind::InvalidBasis,
                "basis dimension does not match the input");
        ComplexMatrix out(dim_, dim_);
        if (computational_) {
            for (std::size_t a = 0; a < dim_; ++a) out(a, a) = x(a, a);
            return out;
        }
        for (std::size_t a = 0; a < dim_; ++a) out = out + trace(projectors_[a] * x) * projectors_[a];
        return out;
    }

private:
    std::size_t dim_ = 0;
    bool computational_ = false;
    std::vector<ComplexMatrix> projectors_;
};

} // namespace entropyflow
