// Diffusion-based coarse graining of grid densities: one explicit,
// conservative finite-volume update per call, with reflecting (zero-flux)
// boundaries so normalization is conserved exactly.
//
// Both the simple constant-sigma form and the generalized form with a
// position/direction/density-dependent tensor sigma^{ij} are supported. The
// smearing parameter is pseudo-time: it need not be physical time.

#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "entropyflow/classical/grid_density.hpp"
#include "entropyflow/linalg/hermitian_eigen.hpp"

namespace entropyflow {

/// sigma^{ij}(cellCenter, localDensity), returned row-major (dims x dims).
using DiffusionTensorFn =
    std::function<std::vector<double>(const std::array<double, 3>&, double)>;

struct DiffusionSpec {
    enum class Kind { Simple, Generalized };

    Kind kind = Kind::Simple;
    double sigma = 1.0;
    DiffusionTensorFn sigma_tensor;
    double step = 0.0;

    static DiffusionSpec simple(double sigma, double step) {
        require(std::isfinite(sigma) && sigma > 0.0, ErrorKind::ParameterOutOfRange,
                "simple diffusion requires sigma > 0");
        require(std::isfinite(step) && step > 0.0, ErrorKind::ParameterOutOfRange,
                "step must be positive");
        DiffusionSpec s;
        s.kind = Kind::Simple;
        s.sigma = sigma;
        s.step = step;
        return s;
    }

    static DiffusionSpec generalized(DiffusionTensorFn tensor, double step) {
        require(static_cast<bool>(tensor), ErrorKind::ParameterOutOfRange,
                "generalized diffusion requires a tensor callback");
        require(std::isfinite(step) && step > 0.0, ErrorKind::ParameterOutOfRange,
                "step must be positive");
        DiffusionSpec s;
        s.kind = Kind::Generalized;
        s.sigma_tensor = std::move(tensor);
        s.step = step;
        return s;
    }
};

namespace detail {

struct GridGeometry {
    std::size_t dims;
    std::array<std::size_t, 3> shape{1, 1, 1};
    std::array<double, 3> spacing{1.0, 1.0, 1.0};
    std::array<std::size_t, 3> strides{1, 1, 1};

    explicit GridGeometry(const GridDensity& g) : dims(g.dims()) {
        for (std::size_t a = 0; a < dims; ++a) {
            shape[a] = g.shape()[a];
            spacing[a] = g.spacing()[a];
        }
        const auto s = g.strides();
        for (std::size_t a = 0; a < dims; ++a) strides[a] = s[a];
    }

    std::array<std::size_t, 3> coords(std::size_t cell) const {
        std::array<std::size_t, 3> c{0, 0, 0};
        for (std::size_t a = 0; a < dims; ++a) {
            c[a] = cell / strides[a];
            cell %= strides[a];
        }
        return c;
    }

    std::array<double, 3> center(const std::array<std::size_t, 3>& c) const {
        std::array<double, 3> x{0.0, 0.0, 0.0};
        for (std::size_t a = 0; a < dims; ++a)
            x[a] = (static_cast<double>(c[a]) + 0.5) * spacing[a];
        return x;
    }
};

/// Evaluate, validate (symmetry 1e-12, eigenvalues >= -1e-12) and cache the
/// diffusion tensor at every cell. Simple specs yield sigma * I.
inline std::vector<std::vector<double>> evaluate_tensors(const GridDensity& rho,
                                                         const DiffusionSpec& spec,
                                                         const GridGeometry& geo) {
    const std::size_t d = geo.dims;
    const std::size_t cells = rho.cell_count();
    std::vector<std::vector<double>> tensors(cells);
    if (spec.kind == DiffusionSpec::Kind::Simple) {
        std::vector<double> iso(d * d, 0.0);
        for (std::size_t a = 0; a < d; ++a) iso[a * d + a] = spec.sigma;
        for (std::size_t c = 0; c < cells; ++c) tensors[c] = iso;
        return tensors;
    }
    for (std::size_t c = 0; c < cells; ++c) {
        const auto x = geo.center(geo.coords(c));
        std::vector<double> t = spec.sigma_tensor(x, rho.values()[c]);
        require(t.size() == d * d, ErrorKind::ParameterOutOfRange,
                "diffusion tensor must be dims x dims");
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                require(std::abs(t[i * d + j] - t[j * d + i]) <= 1e-12,
                        ErrorKind::ParameterOutOfRange,
                        "diffusion tensor must be symmetric within 1e-12");
        if (d == 1) {
            require(t[0] >= -1e-12, ErrorKind::ParameterOutOfRange,
                    "diffusion tensor must be positive semidefinite");
        } else {
            ComplexMatrix m(d, d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) m(i, j) = 0.5 * (t[i * d + j] + t[j * d + i]);
            require(hermitian_eigenvalues(m).front() >= -1e-12, ErrorKind::ParameterOutOfRange,
                    "diffusion tensor must be positive semidefinite");
        }
        tensors[c] = std::move(t);
    }
    return tensors;
}

inline double max_tensor_bound(const std::vector<std::vector<double>>& tensors, std::size_t d) {
    // Gershgorin bound on the largest eigenvalue over all evaluated points.
    double worst = 0.0;
    for (const auto& t : tensors)
        for (std::size_t i = 0; i < d; ++i) {
            double row = 0.0;
            for (std::size_t j = 0; j < d; ++j) row += std::abs(t[i * d + j]);
            worst = std::max(worst, row);
        }
    return worst;
}

inline void check_stability(const GridDensity& rho, const DiffusionSpec& spec, double max_sigma) {
    double coeff = 0.0;
    for (std::size_t a = 0; a < rho.dims(); ++a)
        coeff += 2.0 / (rho.spacing()[a] * rho.spacing()[a]);
    require(spec.step * max_sigma * coeff <= 1.0 + 1e-12, ErrorKind::UnstableStep,
            "step * maxSigma * sum(2/h^2) exceeds the stability bound");
}

/// Centered gradient along axis a with reflected ghost cells (zero-gradient
/// mirror at the boundary).
inline double centered_gradient(const std::vector<double>& v, const GridGeometry& geo,
                                const std::array<std::size_t, 3>& c, std::size_t cell,
                                std::size_t a) {
    const double lo =
        c[a] > 0 ? v[cell - geo.strides[a]] : v[cell];
    const double hi =
        c[a] + 1 < geo.shape[a] ? v[cell + geo.strides[a]] : v[cell];
    return (hi - lo) / (2.0 * geo.spacing[a]);
}

} // namespace detail

/// One explicit conservative update. Total probability is conserved and, under
/// the stability bound, non-negativity is preserved for isotropic tensors.
inline GridDensity diffusion_step(const GridDensity& rho, const DiffusionSpec& spec) {
    const detail::GridGeometry geo(rho);
    const auto tensors = detail::evaluate_tensors(rho, spec, geo);
    detail::check_stability(rho, spec, detail::max_tensor_bound(tensors, geo.dims));

    const std::vector<double>& v = rho.values();
    std::vector<double> next = v;
    const std::size_t d = geo.dims;

    for (std::size_t a = 0; a < d; ++a) {
        const double h = geo.spacing[a];
        const std::size_t stride = geo.strides[a];
        for (std::size_t cell = 0; cell < v.size(); ++cell) {
            const auto c = geo.coords(cell);
            if (c[a] + 1 >= geo.shape[a]) continue; // no face beyond the boundary
            const std::size_t right = cell + stride;

            // Face flux in +a direction: -sum_j sigma^{aj} d_j rho, with the
            // normal gradient two-point and tangential gradients averaged from
            // the two adjacent cells.
            double flux = 0.0;
            const double normal_grad = (v[right] - v[cell]) / h;
            for (std::size_t j = 0; j < d; ++j) {
                const double sig_face =
                    0.5 * (tensors[cell][a * d + j] + tensors[right][a * d + j]);
                if (sig_face == 0.0) continue;
                double grad_j;
                if (j == a) {
                    grad_j = normal_grad;
                } else {
                    const auto cr = geo.coords(right);
                    grad_j = 0.5 * (detail::centered_gradient(v, geo, c, cell, j) +
                                    detail::centered_gradient(v, geo, cr, right, j));
                }
                flux -= sig_face * grad_j;
            }

            const double transfer = spec.step * flux / h;
            next[cell] -= transfer;
            next[right] += transfer;
        }
    }
    return rho.with_values(std::move(next));
}

/// Quadrature of the entropy production integrand sigma^{ij} d_i rho d_j rho / rho,
/// evaluated cell-centered so positive semidefinite tensors give a pointwise
/// non-negative integrand. Vanishing cells contribute nothing provided the
/// local gradient also vanishes.
inline double diffusion_entropy_rate(const GridDensity& rho, const DiffusionSpec& spec) {
    const detail::GridGeometry geo(rho);
    const auto tensors = detail::evaluate_tensors(rho, spec, geo);
    detail::check_stability(rho, spec, detail::max_tensor_bound(tensors, geo.dims));

    const std::vector<double>& v = rho.values();
    const std::size_t d = geo.dims;
    const double vol = rho.cell_volume();

    double rate = 0.0;
    for (std::size_t cell = 0; cell < v.size(); ++cell) {
        const auto c = geo.coords(cell);
        std::array<double, 3> grad{0.0, 0.0, 0.0};
        double grad_norm = 0.0;
        for (std::size_t a = 0; a < d; ++a) {
            grad[a] = detail::centered_gradient(v, geo, c, cell, a);
            grad_norm = std::max(grad_norm, std::abs(grad[a]));
        }
        if (v[cell] < 1e-15) {
            require(grad_norm < 1e-12, ErrorKind::UnstableStep,
                    "entropy-rate integrand is singular: vanishing density with "
                    "non-vanishing gradient");
            continue;
        }
        double quad = 0.0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) quad += tensors[cell][i * d + j] * grad[i] * grad[j];
        rate += quad / v[cell];
    }
    return rate * vol;
}

} // namespace entropyflow
