#pragma once

#include <memory>
#include <span>
#include <vector>

namespace pnlattrib {

/// Absolute tolerance for matching time points (years). Grids are built from
/// exact dyadic rationals wherever possible; the tolerance only absorbs
/// floating-point noise from merged or computed points.
inline constexpr double kTimeTol = 1e-12;

/// Strictly increasing finite set of times starting at 0 and ending at the
/// horizon. Serves both as the sampling grid of step paths and as a partition
/// for the sequential-updating engine.
class TimeGrid {
public:
    explicit TimeGrid(std::vector<double> points);

    const std::vector<double>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    double operator[](std::size_t k) const { return points_[k]; }
    double horizon() const { return points_.back(); }

    /// Largest gap between consecutive points.
    double mesh() const;

    /// Index of the largest point <= t (within kTimeTol). t past the horizon
    /// clamps to the last index. Throws std::domain_error for t < 0.
    std::size_t floor_index(double t) const;

    /// Index of the point equal to t (within kTimeTol); throws if absent.
    std::size_t index_of(double t) const;

    bool contains(double t) const;

    /// True when every point of this grid appears in `finer`.
    bool subset_of(const TimeGrid& finer) const;

private:
    std::vector<double> points_;
};

using GridPtr = std::shared_ptr<const TimeGrid>;

GridPtr make_grid(std::vector<double> points);

/// Uniform dyadic grid covering [0, horizon]: points k * 2^-mesh_exponent,
/// with the horizon appended when it is not itself a multiple.
GridPtr make_dyadic_grid(double horizon, int mesh_exponent);

/// Sorted union of two point sets, deduplicated within kTimeTol.
std::vector<double> merge_points(std::span<const double> a, std::span<const double> b);

/// Increasing sequence of nested partitions with strictly decreasing meshes.
class PartitionSequence {
public:
    explicit PartitionSequence(std::vector<GridPtr> levels);

    std::size_t size() const { return levels_.size(); }
    const GridPtr& level(std::size_t i) const { return levels_[i]; }
    const GridPtr& coarsest() const { return levels_.front(); }
    const GridPtr& finest() const { return levels_.back(); }

private:
    std::vector<GridPtr> levels_;
};

/// Dyadic partitions of [0, horizon] for the given mesh exponents (ascending).
PartitionSequence make_dyadic_partitions(double horizon, std::span<const int> exponents);

} // namespace pnlattrib
