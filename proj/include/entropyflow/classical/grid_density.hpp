// Sampled continuum probability density on a regular 1D/2D/3D grid, plus the
// box partitions used for continuum -> discretium coarse graining.
//
// A density carries its reference value rho_star: the continuum entropy
// -integral rho ln(rho/rho_star) is only defined relative to it.

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "entropyflow/core/error.hpp"

namespace entropyflow {

class GridDensity {
public:
    GridDensity(std::vector<std::size_t> shape, std::vector<double> spacing,
                std::vector<double> values, double rho_star)
        : shape_(std::move(shape)), spacing_(std::move(spacing)), values_(std::move(values)),
          rho_star_(rho_star) {
        require(!shape_.empty() && shape_.size() <= 3, ErrorKind::InvalidDensity,
                "grid must have 1 to 3 axes");
        require(spacing_.size() == shape_.size(), ErrorKind::InvalidDensity,
                "one spacing per axis required");
        std::size_t cells = 1;
        for (std::size_t n : shape_) {
            require(n > 0, ErrorKind::InvalidDensity, "axis extent must be positive");
            cells *= n;
        }
        for (double h : spacing_)
            require(std::isfinite(h) && h > 0.0, ErrorKind::InvalidDensity,
                    "spacing must be positive and finite");
        require(values_.size() == cells, ErrorKind::InvalidDensity,
                "value count does not match grid shape");
        require(std::isfinite(rho_star_) && rho_star_ > 0.0, ErrorKind::InvalidDensity,
                "rho_star must be positive and finite");
        for (double v : values_) {
            require(std::isfinite(v), ErrorKind::InvalidDensity, "density values must be finite");
            // -1e-15 slack absorbs rounding from flux updates
            require(v >= -1e-15, ErrorKind::InvalidDensity, "density values must be >= 0");
        }
        require(std::abs(mass() - 1.0) <= 1e-9, ErrorKind::InvalidDensity,
                "density must integrate to 1 within 1e-9");
    }

    std::size_t dims() const noexcept { return shape_.size(); }
    const std::vector<std::size_t>& shape() const noexcept { return shape_; }
    const std::vector<double>& spacing() const noexcept { return spacing_; }
    const std::vector<double>& values() const noexcept { return values_; }
    double rho_star() const noexcept { return rho_star_; }

    std::size_t cell_count() const noexcept { return values_.size(); }

    double cell_volume() const noexcept {
        double v = 1.0;
        for (double h : spacing_) v *= h;
        return v;
    }

    double total_volume() const noexcept {
        return cell_volume() * static_cast<double>(cell_count());
    }

    double mass() const noexcept {
        double s = 0.0;
        for (double v : values_) s += v;
        return s * cell_volume();
    }

    GridDensity with_rho_star(double rho_star) const {
        return GridDensity(shape_, spacing_, values_, rho_star);
    }

    GridDensity with_values(std::vector<double> values) const {
        return GridDensity(shape_, spacing_, std::move(values), rho_star_);
    }

    /// Strides of the row-major cell layout (last axis fastest).
    std::array<std::size_t, 3> strides() const noexcept {
        std::array<std::size_t, 3> s{1, 1, 1};
        for (std::size_t a = shape_.size(); a-- > 1;) s[a - 1] = s[a] * shape_[a];
        return s;
    }

private:
    std::vector<std::size_t> shape_;
    std::vector<double> spacing_;
    std::vector<double> values_;
    double rho_star_;
};

/// -sum rho ln(rho/rho_star) * cellVolume. May be negative: the continuum
/// entropy is relative to rho_star. Cells with rho <= 0 contribute nothing.
inline double continuum_entropy(const GridDensity& rho) {
    const double h = rho.cell_volume();
    const double log_ref = std::log(rho.rho_star());
    double s = 0.0;
    for (double v : rho.values())
        if (v > 0.0) s -= v * (std::log(v) - log_ref);
    return s * h;
}

/// Disjoint cover of the grid cells by labeled boxes.
class BoxPartition {
public:
    BoxPartition(const GridDensity& grid, std::vector<std::size_t> assignment)
        : assignment_(std::move(assignment)) {
        require(assignment_.size() == grid.cell_count(), ErrorKind::PartitionMismatch,
                "assignment must label every grid cell");
        std::size_t boxes = 0;
        for (std::size_t label : assignment_) boxes = std::max(boxes, label + 1);
        std::vector<std::size_t> counts(boxes, 0);
        for (std::size_t label : assignment_) ++counts[label];
        for (std::size_t b = 0; b < boxes; ++b)
            require(counts[b] > 0, ErrorKind::PartitionMismatch,
                    "box label " + std::to_string(b) + " has no cells");
        box_volumes_.resize(boxes);
        cell_counts_ = std::move(counts);
        for (std::size_t b = 0; b < boxes; ++b)
            box_volumes_[b] = static_cast<double>(cell_counts_[b]) * grid.cell_volume();
    }

    /// k contiguous runs of cells (in flattened order), as equal as possible.
    static BoxPartition equal_slabs(const GridDensity& grid, std::size_t boxes) {
        require(boxes > 0 && boxes <= grid.cell_count(), ErrorKind::PartitionMismatch,
                "box count must be in [1, cellCount]");
        const std::size_t cells = grid.cell_count();
        std::vector<std::size_t> assignment(cells);
        for (std::size_t c = 0; c < cells; ++c)
            assignment[c] = std::min(c * boxes / cells, boxes - 1);
        return BoxPartition(grid, std::move(assignment));
    }

    std::size_t box_count() const noexcept { return box_volumes_.size(); }
    std::size_t cell_count() const noexcept { return assignment_.size(); }
    const std::vector<std::size_t>& assignment() const noexcept { return assignment_; }
    const std::vector<double>& box_volumes() const noexcept { return box_volumes_; }

    void check_compatible(const GridDensity& grid) const {
        require(assignment_.size() == grid.cell_count(), ErrorKind::PartitionMismatch,
                "partition does not cover this grid");
    }

private:
    std::vector<std::size_t> assignment_;
    std::vector<double> box_volumes_;
    std::vector<std::size_t> cell_counts_;
};

} // namespace entropyflow
